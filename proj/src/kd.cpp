#include "kdq/kd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kdq {

namespace {

Complex tensor_sum(const std::vector<Complex>& values) {
    return std::accumulate(values.begin(), values.end(), Complex(0.0, 0.0));
}

// Advance a row-major multi-index; returns false after the last index.
bool next_index(std::vector<Eigen::Index>& idx, const std::vector<Eigen::Index>& shape) {
    for (Eigen::Index axis = static_cast<Eigen::Index>(idx.size()) - 1; axis >= 0; --axis) {
        if (++idx[axis] < shape[axis]) return true;
        idx[axis] = 0;
    }
    return false;
}

Matrix block_projector(const OrthonormalBasis& basis, const std::vector<Eigen::Index>& block) {
    Matrix p = Matrix::Zero(basis.dim(), basis.dim());
    for (Eigen::Index i : block) p += projector(basis, i);
    return p;
}

}  // namespace

KDDistribution::KDDistribution(std::vector<Eigen::Index> shape, std::vector<Complex> values,
                               std::vector<OrthonormalBasis> bases,
                               std::optional<DensityOperator> state, bool conditioned,
                               std::optional<double> postselection_probability, bool coarse)
    : shape_(std::move(shape)),
      values_(std::move(values)),
      bases_(std::move(bases)),
      state_(std::move(state)),
      conditioned_(conditioned),
      postselection_probability_(postselection_probability),
      coarse_(coarse) {
    if (shape_.empty() || (!conditioned_ && shape_.size() < 2))
        throw InvariantViolation("KDDistribution needs k >= 2 axes (k >= 1 if conditioned)");
    Eigen::Index count = 1;
    for (Eigen::Index len : shape_) {
        if (len < 1) throw InvariantViolation("KDDistribution axis lengths must be positive");
        count *= len;
    }
    if (static_cast<Eigen::Index>(values_.size()) != count)
        throw InvariantViolation("KDDistribution value count does not match shape");
    if (!bases_.empty() && bases_.size() != shape_.size())
        throw InvariantViolation("KDDistribution needs one basis per axis when bases are given");
    Complex total = tensor_sum(values_);
    if (std::abs(total - Complex(1.0, 0.0)) > 1e-9)
        throw InvariantViolation("KDDistribution entries do not sum to 1");
    if (!conditioned_) {
        for (const Complex& q : values_)
            if (std::abs(q) > 1.0 + 1e-9)
                throw InvariantViolation("unconditioned KD entry magnitude exceeds 1");
    }
}

Eigen::Index KDDistribution::flat_index(const std::vector<Eigen::Index>& index) const {
    if (index.size() != shape_.size()) throw Error("KDDistribution index rank mismatch");
    Eigen::Index flat = 0;
    for (std::size_t axis = 0; axis < shape_.size(); ++axis) {
        if (index[axis] < 0 || index[axis] >= shape_[axis])
            throw Error("KDDistribution index out of range");
        flat = flat * shape_[axis] + index[axis];
    }
    return flat;
}

Complex KDDistribution::at(const std::vector<Eigen::Index>& index) const {
    return values_[flat_index(index)];
}

Matrix KDDistribution::as_matrix() const {
    if (k() != 2) throw Error("as_matrix requires a k = 2 distribution");
    Matrix m(shape_[0], shape_[1]);
    for (Eigen::Index i = 0; i < shape_[0]; ++i)
        for (Eigen::Index j = 0; j < shape_[1]; ++j) m(i, j) = values_[i * shape_[1] + j];
    return m;
}

KDDistribution compute_extended_kd(const DensityOperator& state,
                                   const std::vector<OrthonormalBasis>& bases) {
    if (bases.size() < 2) throw Error("compute_extended_kd requires k >= 2 bases");
    const Eigen::Index d = state.dim();
    for (const auto& b : bases)
        if (b.dim() != d) throw DimensionMismatch("compute_extended_kd: basis dimension mismatch");
    const Eigen::Index k = static_cast<Eigen::Index>(bases.size());

    // Tr(Π_{i_k} … Π_{i_1} ρ) factorizes into a chain of adjacent-basis
    // overlaps times ⟨a^(1)_{i_1}|ρ|a^(k)_{i_k}⟩.
    std::vector<Matrix> overlaps;  // overlaps[m](i_{m+1}, i_m) = ⟨a^(m+1)|a^(m)⟩
    for (Eigen::Index m = 0; m + 1 < k; ++m)
        overlaps.push_back(bases[m + 1].columns().adjoint() * bases[m].columns());
    Matrix rho_cross = bases[0].columns().adjoint() * state.matrix() * bases[k - 1].columns();

    std::vector<Eigen::Index> shape(k, d);
    std::vector<Complex> values;
    values.reserve(static_cast<std::size_t>(std::pow(static_cast<double>(d), k)));
    std::vector<Eigen::Index> idx(k, 0);
    do {
        Complex q = rho_cross(idx[0], idx[k - 1]);
        for (Eigen::Index m = 0; m + 1 < k; ++m) q *= overlaps[m](idx[m + 1], idx[m]);
        values.push_back(q);
    } while (next_index(idx, shape));

    return KDDistribution(std::move(shape), std::move(values), bases, state);
}

KDDistribution compute_kd(const DensityOperator& state, const OrthonormalBasis& A,
                          const OrthonormalBasis& F) {
    return compute_extended_kd(state, {A, F});
}

KDDistribution marginalize(const KDDistribution& dist, Eigen::Index alpha, Eigen::Index beta) {
    const Eigen::Index k = dist.k();
    if (alpha < 0 || beta >= k || alpha >= beta) throw Error("marginalize: invalid axes");
    if (k == 2) return dist;

    std::vector<Eigen::Index> shape{dist.shape()[alpha], dist.shape()[beta]};
    std::vector<Complex> values(static_cast<std::size_t>(shape[0] * shape[1]), Complex(0, 0));
    std::vector<Eigen::Index> idx(k, 0);
    do {
        values[idx[alpha] * shape[1] + idx[beta]] += dist.at(idx);
    } while (next_index(idx, dist.shape()));

    std::vector<OrthonormalBasis> bases;
    if (!dist.bases().empty()) bases = {dist.bases()[alpha], dist.bases()[beta]};
    return KDDistribution(std::move(shape), std::move(values), std::move(bases), dist.state(),
                          dist.conditioned(), dist.postselection_probability(), dist.coarse());
}

Eigen::VectorXd marginal_probabilities(const KDDistribution& dist, Eigen::Index axis) {
    const Eigen::Index k = dist.k();
    if (axis != 0 && axis != k - 1)
        throw Error("marginal_probabilities: only the first or last axis yields Born probabilities");
    const Eigen::Index len = dist.shape()[axis];
    Vector sums = Vector::Zero(len);
    std::vector<Eigen::Index> idx(k, 0);
    do {
        sums(idx[axis]) += dist.at(idx);
    } while (next_index(idx, dist.shape()));

    Eigen::VectorXd probs(len);
    double total = 0.0;
    for (Eigen::Index i = 0; i < len; ++i) {
        if (std::abs(sums(i).imag()) > 1e-9)
            throw InvariantViolation("marginal has nonzero imaginary residue");
        if (sums(i).real() < -1e-9)
            throw InvariantViolation("marginal probability is negative");
        probs(i) = sums(i).real();
        total += probs(i);
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw InvariantViolation("marginal probabilities do not sum to 1");
    return probs;
}

Reconstruction reconstruct_state(const KDDistribution& dist, double tol_zero) {
    if (dist.conditioned())
        throw Error("reconstruct_state: conditioned distributions do not represent a state");
    if (dist.coarse()) throw Error("reconstruct_state: coarse axes cannot be inverted");
    if (dist.bases().empty())
        throw Error("reconstruct_state: distribution carries no bases");

    KDDistribution marg = marginalize(dist, 0, dist.k() - 1);
    const OrthonormalBasis& first = marg.bases().front();
    const OrthonormalBasis& last = marg.bases().back();
    const Eigen::Index d = first.dim();
    Matrix cross = last.columns().adjoint() * first.columns();  // ⟨a_j^(k)|a_i^(1)⟩

    Matrix rho = Matrix::Zero(d, d);
    std::vector<std::pair<Eigen::Index, Eigen::Index>> convention_cells;
    Matrix table = marg.as_matrix();
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            Complex coeff;
            if (std::abs(cross(j, i)) <= tol_zero) {
                if (!dist.state())
                    throw Error(
                        "reconstruct_state: zero overlap requires the source state for the "
                        "matrix-element convention");
                coeff = first.vector(i).amplitudes().dot(dist.state()->matrix() *
                                                         last.vector(j).amplitudes());
                convention_cells.emplace_back(i, j);
            } else {
                coeff = table(i, j) / cross(j, i);
            }
            rho += coeff * (first.columns().col(i) * last.columns().col(j).adjoint());
        }
    }
    // Round-off symmetrization only; the expansion is Hermitian analytically.
    rho = 0.5 * (rho + rho.adjoint().eval());
    return Reconstruction{DensityOperator(std::move(rho)), std::move(convention_cells)};
}

KDDistribution condition_on(const KDDistribution& dist, const PostselectionOutcome& outcome,
                            double tol_zero) {
    const Eigen::Index k = dist.k();
    if (k < 2) throw Error("condition_on: distribution has no axis left to condition on");
    const Eigen::Index last_len = dist.shape()[k - 1];
    if (outcome.indices.empty()) throw Error("condition_on: empty outcome set");
    std::vector<bool> selected(last_len, false);
    for (Eigen::Index i : outcome.indices) {
        if (i < 0 || i >= last_len) throw Error("condition_on: outcome index out of range");
        selected[i] = true;
    }

    std::vector<Eigen::Index> shape(dist.shape().begin(), dist.shape().end() - 1);
    Eigen::Index count = 1;
    for (Eigen::Index len : shape) count *= len;
    std::vector<Complex> sums(count, Complex(0, 0));
    Complex p_sum(0, 0);
    std::vector<Eigen::Index> idx(k, 0);
    do {
        if (!selected[idx[k - 1]]) continue;
        Complex q = dist.at(idx);
        p_sum += q;
        Eigen::Index flat = 0;
        for (Eigen::Index axis = 0; axis + 1 < k; ++axis) flat = flat * shape[axis] + idx[axis];
        sums[flat] += q;
    } while (next_index(idx, dist.shape()));

    if (dist.state() && !dist.bases().empty() && !dist.coarse()) {
        Matrix f_block = block_projector(dist.bases().back(), outcome.indices);
        double p_trace = (f_block * dist.state()->matrix()).trace().real();
        if (std::abs(p_sum.real() - p_trace) > 1e-9 || std::abs(p_sum.imag()) > 1e-9)
            throw InvariantViolation(
                "condition_on: quasiprobability sum disagrees with Tr(F̂ρ̂)");
    }
    if (p_sum.real() <= tol_zero)
        throw Error("condition_on: postselection probability is not positive");

    for (Complex& q : sums) q /= p_sum.real();
    std::vector<OrthonormalBasis> bases;
    if (!dist.bases().empty())
        bases.assign(dist.bases().begin(), dist.bases().end() - 1);
    return KDDistribution(std::move(shape), std::move(sums), std::move(bases), dist.state(),
                          /*conditioned=*/true, p_sum.real(), dist.coarse());
}

KDDistribution coarse_grain(const DensityOperator& state, const EigenspacePartition& partA,
                            const EigenspacePartition& partF, const OrthonormalBasis& basisA,
                            const OrthonormalBasis& basisF) {
    const Eigen::Index d = state.dim();
    if (partA.dim() != d || partF.dim() != d || basisA.dim() != d || basisF.dim() != d)
        throw DimensionMismatch("coarse_grain: dimension mismatch");

    // Sum the fine-grained entries over the degeneracy blocks; the trace form
    // with block projectors lives in the oracle module as an independent check.
    Matrix fine = compute_kd(state, basisA, basisF).as_matrix();
    const Eigen::Index la = partA.block_count();
    const Eigen::Index lf = partF.block_count();
    std::vector<Complex> values(static_cast<std::size_t>(la * lf), Complex(0, 0));
    for (Eigen::Index l = 0; l < la; ++l)
        for (Eigen::Index m = 0; m < lf; ++m)
            for (Eigen::Index i : partA.blocks()[l])
                for (Eigen::Index j : partF.blocks()[m])
                    values[l * lf + m] += fine(i, j);

    return KDDistribution({la, lf}, std::move(values), {}, state, false, std::nullopt,
                          /*coarse=*/true);
}

KDDistribution one_sided_coarse_grain(const DensityOperator& state, const OrthonormalBasis& A,
                                      const EigenspacePartition& partF,
                                      const OrthonormalBasis& basisF) {
    return coarse_grain(state, EigenspacePartition::singletons(state.dim()), partF, A, basisF);
}

}  // namespace kdq
