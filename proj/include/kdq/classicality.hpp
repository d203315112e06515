#ifndef KDQ_CLASSICALITY_HPP
#define KDQ_CLASSICALITY_HPP

#include "kdq/kd.hpp"

namespace kdq {

// |⟨a|f⟩| above this counts as a parallel pair.  Phase-invariant.
inline constexpr double kTolParallel = 1.0 - 1e-9;

struct SupportCounts {
    Eigen::Index d = 0;
    Eigen::Index n_a = 0;        // basis-A vectors with nonzero overlap with Ψ
    Eigen::Index n_f = 0;
    Eigen::Index n_par = 0;      // parallel A-vectors nonorthogonal to Ψ
    Eigen::Index n_bar_par = 0;  // parallel A-vectors orthogonal to Ψ
    bool coarse = false;

    Eigen::Index lhs() const { return 2 * n_a + 2 * n_f; }
    Eigen::Index rhs() const { return 3 * d + n_par - 3 * n_bar_par; }
};

enum class Classicality { Classical, Negative, Nonreal, NegativeAndNonreal };

struct Verdict {
    Classicality label = Classicality::Classical;
    double max_negative_real = 0.0;  // most negative real part (<= 0)
    double max_abs_imag = 0.0;
    Eigen::Index zero_count = 0;

    bool classical() const { return label == Classicality::Classical; }
};

struct Thm1Result {
    bool certified_nonclassical = false;  // strict inequality holds
    bool saturated = false;               // lhs == rhs exactly
    Eigen::Index lhs = 0;
    Eigen::Index rhs = 0;
};

SupportCounts support_counts(const Ket& psi, const OrthonormalBasis& A, const OrthonormalBasis& F,
                             double tol_zero = default_tol_zero());

Thm1Result thm1_check(const SupportCounts& counts);

/// True certifies nonclassicality; false is inconclusive.
bool thm1_sufficient_nonclassical(const SupportCounts& counts);

/// True iff the k = 2 distribution has no zero-valued entries.
bool corollary1_check(const KDDistribution& dist, double tol_zero = default_tol_zero());

Verdict classify(const KDDistribution& dist, double tol_zero = default_tol_zero());

SupportCounts coarse_support_counts(const Ket& psi, const EigenspacePartition& partA,
                                    const EigenspacePartition& partF,
                                    const OrthonormalBasis& basisA, const OrthonormalBasis& basisF,
                                    double tol_zero = default_tol_zero());

bool coarse_thm_check(const SupportCounts& counts);

/// Zero-free coarse distribution with one nondegenerate side certifies
/// nonclassicality.  Refuses when the hypotheses are unmet.
bool corollary2_check(const KDDistribution& dist, const EigenspacePartition& partA,
                      const EigenspacePartition& partF, double tol_zero = default_tol_zero());

struct CommutationReport {
    bool rho_a_commute = false;
    bool rho_f_commute = false;
    bool a_f_commute = false;

    bool any_commute() const { return rho_a_commute || rho_f_commute || a_f_commute; }
};

CommutationReport commutation_report(const DensityOperator& state, const Observable& A,
                                     const Observable& F);

}  // namespace kdq

#endif
