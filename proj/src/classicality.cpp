#include "kdq/classicality.hpp"

#include <cmath>

namespace kdq {

SupportCounts support_counts(const Ket& psi, const OrthonormalBasis& A, const OrthonormalBasis& F,
                             double tol_zero) {
    const Eigen::Index d = psi.dim();
    if (A.dim() != d || F.dim() != d)
        throw DimensionMismatch("support_counts: dimension mismatch");

    Vector a_overlaps = A.columns().adjoint() * psi.amplitudes();
    Vector f_overlaps = F.columns().adjoint() * psi.amplitudes();
    Matrix cross = A.columns().adjoint() * F.columns();  // ⟨a_i|f_j⟩

    SupportCounts counts;
    counts.d = d;
    for (Eigen::Index i = 0; i < d; ++i) {
        if (std::abs(a_overlaps(i)) > tol_zero) ++counts.n_a;
        if (std::abs(f_overlaps(i)) > tol_zero) ++counts.n_f;
    }
    for (Eigen::Index i = 0; i < d; ++i) {
        bool parallel = false;
        for (Eigen::Index j = 0; j < d && !parallel; ++j)
            parallel = std::abs(cross(i, j)) > kTolParallel;
        if (!parallel) continue;
        if (std::abs(a_overlaps(i)) > tol_zero)
            ++counts.n_par;
        else
            ++counts.n_bar_par;
    }
    return counts;
}

Thm1Result thm1_check(const SupportCounts& counts) {
    if (counts.coarse) throw Error("thm1_check expects fine-grained counts");
    Thm1Result result;
    result.lhs = counts.lhs();
    result.rhs = counts.rhs();
    result.certified_nonclassical = result.lhs > result.rhs;
    result.saturated = result.lhs == result.rhs;
    return result;
}

bool thm1_sufficient_nonclassical(const SupportCounts& counts) {
    return thm1_check(counts).certified_nonclassical;
}

bool corollary1_check(const KDDistribution& dist, double tol_zero) {
    if (dist.k() != 2) throw Error("corollary1_check expects a k = 2 distribution");
    for (const Complex& q : dist.values())
        if (std::abs(q) <= tol_zero) return false;
    return true;
}

Verdict classify(const KDDistribution& dist, double tol_zero) {
    Verdict verdict;
    bool negative = false;
    bool nonreal = false;
    for (const Complex& q : dist.values()) {
        if (q.real() < verdict.max_negative_real) verdict.max_negative_real = q.real();
        double abs_imag = std::abs(q.imag());
        if (abs_imag > verdict.max_abs_imag) verdict.max_abs_imag = abs_imag;
        if (q.real() < -tol_zero) negative = true;
        if (abs_imag > tol_zero) nonreal = true;
        if (std::abs(q) <= tol_zero) ++verdict.zero_count;
    }
    if (negative && nonreal)
        verdict.label = Classicality::NegativeAndNonreal;
    else if (negative)
        verdict.label = Classicality::Negative;
    else if (nonreal)
        verdict.label = Classicality::Nonreal;
    else
        verdict.label = Classicality::Classical;
    return verdict;
}

SupportCounts coarse_support_counts(const Ket& psi, const EigenspacePartition& partA,
                                    const EigenspacePartition& partF,
                                    const OrthonormalBasis& basisA, const OrthonormalBasis& basisF,
                                    double tol_zero) {
    const Eigen::Index d = psi.dim();
    if (partA.dim() != d || partF.dim() != d || basisA.dim() != d || basisF.dim() != d)
        throw DimensionMismatch("coarse_support_counts: dimension mismatch");

    auto projections = [&](const EigenspacePartition& part, const OrthonormalBasis& basis) {
        std::vector<Vector> out;
        for (const auto& block : part.blocks()) {
            Vector proj = Vector::Zero(d);
            for (Eigen::Index i : block)
                proj += basis.columns().col(i) * basis.columns().col(i).dot(psi.amplitudes());
            out.push_back(std::move(proj));
        }
        return out;
    };

    std::vector<Vector> a_proj = projections(partA, basisA);
    std::vector<Vector> f_proj = projections(partF, basisF);

    SupportCounts counts;
    counts.d = d;
    counts.coarse = true;
    std::vector<Vector> f_unit;
    for (const Vector& f : f_proj) {
        if (f.norm() > tol_zero) {
            ++counts.n_f;
            f_unit.push_back(f / f.norm());
        }
    }
    for (const Vector& a : a_proj) {
        double norm = a.norm();
        if (norm <= tol_zero) continue;  // zero-norm blocks excluded throughout
        ++counts.n_a;
        Vector unit = a / norm;
        bool parallel = false;
        for (const Vector& f : f_unit)
            if (std::abs(unit.dot(f)) > kTolParallel) {
                parallel = true;
                break;
            }
        if (!parallel) continue;
        // A nonzero projection Â_l|Ψ⟩ always has ⟨Ψ|Â_l|Ψ⟩ = ‖Â_l|Ψ⟩‖² > 0.
        if (std::abs(unit.dot(psi.amplitudes())) > tol_zero)
            ++counts.n_par;
        else
            ++counts.n_bar_par;
    }
    return counts;
}

bool coarse_thm_check(const SupportCounts& counts) {
    if (!counts.coarse) throw Error("coarse_thm_check expects coarse counts");
    return counts.lhs() > counts.rhs();
}

bool corollary2_check(const KDDistribution& dist, const EigenspacePartition& partA,
                      const EigenspacePartition& partF, double tol_zero) {
    bool a_single = partA.all_singletons();
    bool f_single = partF.all_singletons();
    if (a_single == f_single)
        throw Error("corollary2_check: exactly one observable must be nondegenerate");
    const EigenspacePartition& degenerate = a_single ? partF : partA;
    if (degenerate.block_count() < 2)
        throw Error("corollary2_check: the degenerate observable must not be completely degenerate");
    for (const Complex& q : dist.values())
        if (std::abs(q) <= tol_zero) return false;
    return true;
}

CommutationReport commutation_report(const DensityOperator& state, const Observable& A,
                                     const Observable& F) {
    if (A.basis.dim() != state.dim() || F.basis.dim() != state.dim())
        throw DimensionMismatch("commutation_report: dimension mismatch");
    Matrix ma = observable_matrix(A);
    Matrix mf = observable_matrix(F);
    auto commutes = [](const Matrix& x, const Matrix& y) {
        return (x * y - y * x).cwiseAbs().maxCoeff() <= 1e-9;
    };
    CommutationReport report;
    report.rho_a_commute = commutes(state.matrix(), ma);
    report.rho_f_commute = commutes(state.matrix(), mf);
    report.a_f_commute = commutes(ma, mf);
    return report;
}

}  // namespace kdq
