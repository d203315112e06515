#include "kdq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "kdq/measures.hpp"
#include "kdq/mubs.hpp"

namespace kdq {

namespace {

Rng subseeded_rng(std::uint64_t master, std::uint64_t index) {
    std::seed_seq seq{master, index};
    return Rng(seq);
}

unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("KDQ_THREADS")) {
        long requested = std::strtol(cap, nullptr, 10);
        if (requested > 0) n = std::min<unsigned>(n, static_cast<unsigned>(requested));
    }
    return n;
}

// Splits [0, count) into contiguous chunks, one worker thread each.  Results
// are deterministic because every sample derives its own rng from the master
// seed.
template <typename Body>
void parallel_samples(std::uint64_t count, Body&& body) {
    unsigned workers = worker_count();
    if (workers <= 1 || count < 256) {
        body(0, count);
        return;
    }
    std::vector<std::thread> threads;
    std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t begin = w * chunk;
        std::uint64_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&body, begin, end] { body(begin, end); });
    }
    for (auto& t : threads) t.join();
}

Matrix block_projector(const OrthonormalBasis& basis, const std::vector<Eigen::Index>& block) {
    Matrix p = Matrix::Zero(basis.dim(), basis.dim());
    for (Eigen::Index i : block) {
        Vector v = basis.columns().col(i);
        p += v * v.adjoint();
    }
    return p;
}

bool next_index(std::vector<Eigen::Index>& idx, Eigen::Index d) {
    for (Eigen::Index axis = static_cast<Eigen::Index>(idx.size()) - 1; axis >= 0; --axis) {
        if (++idx[axis] < d) return true;
        idx[axis] = 0;
    }
    return false;
}

OrthonormalBasis ex1_f_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix f = Matrix::Zero(4, 4);
    f(0, 0) = s; f(1, 0) = s;
    f(0, 1) = s; f(1, 1) = -s;
    f(2, 2) = 1.0;
    f(3, 3) = 1.0;
    return OrthonormalBasis(std::move(f));
}

OrthonormalBasis ex2_f_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix f = Matrix::Zero(4, 4);
    f(0, 0) = s; f(1, 0) = s;
    f(0, 1) = s; f(1, 1) = -s;
    f(2, 2) = s; f(3, 2) = s;
    f(2, 3) = s; f(3, 3) = -s;
    return OrthonormalBasis(std::move(f));
}

}  // namespace

std::vector<Complex> kd_by_trace(const DensityOperator& state,
                                 const std::vector<OrthonormalBasis>& bases) {
    if (bases.size() < 2) throw Error("kd_by_trace requires k >= 2 bases");
    const Eigen::Index d = state.dim();
    for (const auto& b : bases)
        if (b.dim() != d) throw DimensionMismatch("kd_by_trace: dimension mismatch");
    const Eigen::Index k = static_cast<Eigen::Index>(bases.size());

    std::vector<std::vector<Matrix>> projectors(k);
    for (Eigen::Index m = 0; m < k; ++m)
        for (Eigen::Index i = 0; i < d; ++i) {
            Vector v = bases[m].columns().col(i);
            projectors[m].push_back(v * v.adjoint());
        }

    std::vector<Complex> values;
    std::vector<Eigen::Index> idx(k, 0);
    do {
        Matrix product = projectors[0][idx[0]] * state.matrix();
        for (Eigen::Index m = 1; m < k; ++m) product = projectors[m][idx[m]] * product;
        values.push_back(product.trace());
    } while (next_index(idx, d));
    return values;
}

std::vector<Complex> kd_by_trace_coarse(const DensityOperator& state,
                                        const EigenspacePartition& partA,
                                        const EigenspacePartition& partF,
                                        const OrthonormalBasis& basisA,
                                        const OrthonormalBasis& basisF) {
    std::vector<Complex> values;
    for (const auto& a_block : partA.blocks()) {
        Matrix al = block_projector(basisA, a_block);
        for (const auto& f_block : partF.blocks()) {
            Matrix fk = block_projector(basisF, f_block);
            values.push_back((fk * al * state.matrix()).trace());
        }
    }
    return values;
}

ScanResult bound_scan(Eigen::Index d, Eigen::Index k, std::uint64_t samples, std::uint64_t seed,
                      bool inject_saturating) {
    if (d < 2 || k < 2) throw Error("bound_scan requires d >= 2 and k >= 2");
    const double bound = thm2_bound(d, k);

    std::vector<double> maxima;
    std::vector<std::uint64_t> violation_counts;
    std::mutex merge;
    parallel_samples(samples, [&](std::uint64_t begin, std::uint64_t end) {
        double local_max = 0.0;
        std::uint64_t local_violations = 0;
        for (std::uint64_t s = begin; s < end; ++s) {
            Rng rng = subseeded_rng(seed, s);
            DensityOperator rho = DensityOperator::from_ket(haar_random_ket(d, rng));
            std::vector<OrthonormalBasis> bases;
            for (Eigen::Index m = 0; m < k; ++m) bases.push_back(haar_random_basis(d, rng));
            double total = nonclassicality_measures(compute_extended_kd(rho, bases)).total;
            local_max = std::max(local_max, total);
            if (total > bound + 1e-9) ++local_violations;
        }
        std::lock_guard<std::mutex> lock(merge);
        maxima.push_back(local_max);
        violation_counts.push_back(local_violations);
    });

    ScanResult result;
    result.samples = samples;
    result.seed = seed;
    for (double m : maxima) result.max_observed = std::max(result.max_observed, m);
    for (std::uint64_t v : violation_counts) result.violations += v;

    if (inject_saturating) {
        auto [psi, bases] = max_nonclassical_instance(mub_triplet_for(d), k);
        double total =
            nonclassicality_measures(compute_extended_kd(DensityOperator::from_ket(psi), bases))
                .total;
        result.max_observed = std::max(result.max_observed, total);
        if (total > bound + 1e-9) ++result.violations;
        ++result.samples;
    }
    return result;
}

std::vector<Vector> nonpositive_witness_set(Eigen::Index n) {
    if (n < 1) throw Error("nonpositive_witness_set: n must be >= 1");
    std::vector<Vector> set;
    for (Eigen::Index i = 0; i < n; ++i) {
        Vector plus = Vector::Zero(n);
        plus(i) = 1.0;
        set.push_back(plus);
        set.push_back(-plus);
    }
    return set;
}

ScanResult nonpositive_set_search(Eigen::Index n, std::uint64_t trials, std::uint64_t seed) {
    if (n < 1) throw Error("nonpositive_set_search: n must be >= 1");
    constexpr double kTol = 1e-12;

    auto admissible = [&](const std::vector<Vector>& set, const Vector& c) {
        for (const Vector& s : set) {
            Complex ip = s.dot(c);
            if (ip.real() > kTol || std::abs(ip.imag()) > kTol) return false;
        }
        return true;
    };

    // Validate the explicit {±e_i} witness before counting it.
    std::vector<Vector> witness = nonpositive_witness_set(n);
    for (std::size_t i = 0; i < witness.size(); ++i)
        for (std::size_t j = i + 1; j < witness.size(); ++j) {
            Complex ip = witness[i].dot(witness[j]);
            if (ip.real() > kTol || std::abs(ip.imag()) > kTol)
                throw Error("nonpositive witness set violates the constraints");
        }

    ScanResult result;
    result.samples = trials;
    result.seed = seed;
    result.max_observed = static_cast<double>(witness.size());

    const std::uint64_t limit = static_cast<std::uint64_t>(2 * n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = subseeded_rng(seed, t);
        std::vector<Vector> set;
        const int attempts = 8 * static_cast<int>(n);
        for (int a = 0; a < attempts; ++a) {
            Vector c(n);
            if (unit(rng) < 0.1) {
                for (Eigen::Index i = 0; i < n; ++i) c(i) = Complex(gauss(rng), gauss(rng));
            } else {
                for (Eigen::Index i = 0; i < n; ++i) c(i) = gauss(rng);
            }
            if (c.norm() < 1e-6) continue;
            if (admissible(set, c))
                set.push_back(c);
            else if (admissible(set, -c))
                set.push_back(-c);
        }
        result.max_observed = std::max(result.max_observed, static_cast<double>(set.size()));
        if (set.size() > limit) ++result.violations;
    }
    return result;
}

std::vector<ClassicalNoncommutingInstance> classical_noncommuting_search(Eigen::Index d,
                                                                         std::uint64_t samples,
                                                                         std::uint64_t seed) {
    if (d < 3) throw Error("classical_noncommuting_search requires d >= 3");

    std::vector<ClassicalNoncommutingInstance> instances;
    if (d == 4) {
        const double s = 1.0 / std::sqrt(2.0);
        Vector psi1 = Vector::Zero(4);
        psi1(2) = s;
        psi1(3) = s;
        instances.push_back({Ket(psi1), OrthonormalBasis::computational(4), ex1_f_basis()});
        Vector psi2 = Vector::Constant(4, 0.5);
        instances.push_back({Ket(psi2), OrthonormalBasis::computational(4), ex2_f_basis()});
    }

    Eigen::VectorXd eigenvalues(d);
    for (Eigen::Index i = 0; i < d; ++i) eigenvalues(i) = static_cast<double>(i);

    std::uniform_real_distribution<double> angle(0.2, M_PI / 2.0 - 0.2);
    for (std::uint64_t s = 0; s < samples; ++s) {
        Rng rng = subseeded_rng(seed, s);
        // Random block construction: rotate F inside the span of the first
        // two A-vectors beyond index 0 and place Ψ across the untouched
        // vector v_0 and the rotated v_1.
        Matrix v = haar_random_unitary(d, rng);
        double theta = angle(rng);
        double alpha = angle(rng);

        Matrix f = v;
        f.col(1) = std::cos(theta) * v.col(1) + std::sin(theta) * v.col(2);
        f.col(2) = -std::sin(theta) * v.col(1) + std::cos(theta) * v.col(2);
        Vector psi = std::cos(alpha) * v.col(0) + std::sin(alpha) * v.col(1);

        ClassicalNoncommutingInstance candidate{Ket(psi), OrthonormalBasis(v),
                                                OrthonormalBasis(std::move(f))};
        DensityOperator rho = DensityOperator::from_ket(candidate.psi);
        if (!classify(compute_kd(rho, candidate.a_basis, candidate.f_basis)).classical()) continue;
        CommutationReport commutators =
            commutation_report(rho, Observable(candidate.a_basis, eigenvalues),
                               Observable(candidate.f_basis, eigenvalues));
        if (commutators.any_commute()) continue;
        instances.push_back(std::move(candidate));
    }
    return instances;
}

JensenCheck jensen_saturation_check(const OrthonormalBasis& basis, const Ket& psi) {
    if (basis.dim() != psi.dim())
        throw DimensionMismatch("jensen_saturation_check: dimension mismatch");
    const Eigen::Index d = basis.dim();
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    JensenCheck check;
    check.saturated = true;
    for (Eigen::Index i = 0; i < d; ++i) {
        double overlap = std::abs(basis.columns().col(i).dot(psi.amplitudes()));
        check.sum += overlap;
        if (std::abs(overlap - target) > 1e-8) check.saturated = false;
    }
    return check;
}

}  // namespace kdq
