#ifndef KDQ_ORACLE_HPP
#define KDQ_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "kdq/classicality.hpp"
#include "kdq/kd.hpp"

namespace kdq {

struct ScanResult {
    std::uint64_t samples = 0;
    double max_observed = 0.0;
    std::uint64_t violations = 0;
    std::uint64_t seed = 0;
};

/// Brute-force Tr(Π̂_{i_k} … Π̂_{i_1} ρ̂) by explicit dense matrix products,
/// independent of the overlap-chain shortcut used by compute_extended_kd.
std::vector<Complex> kd_by_trace(const DensityOperator& state,
                                 const std::vector<OrthonormalBasis>& bases);

/// Coarse-grained analog: Tr(F̂_k Â_l ρ̂) with explicit block projectors.
std::vector<Complex> kd_by_trace_coarse(const DensityOperator& state,
                                        const EigenspacePartition& partA,
                                        const EigenspacePartition& partF,
                                        const OrthonormalBasis& basisA,
                                        const OrthonormalBasis& basisF);

/// Haar-random falsification scan of the total-nonclassicality bound.
/// With inject_saturating, a bound-saturating MUB instance is evaluated
/// alongside the random draws (supported for d in {2, 3, 4}).
ScanResult bound_scan(Eigen::Index d, Eigen::Index k, std::uint64_t samples, std::uint64_t seed,
                      bool inject_saturating = false);

/// Explicit set {±e_1, …, ±e_n} of 2n nonzero vectors with pairwise
/// non-positive inner products.
std::vector<Vector> nonpositive_witness_set(Eigen::Index n);

/// Randomized greedy attempts to grow sets of nonzero vectors in C^n with
/// pairwise inner products <= 0; max_observed is the largest set size seen
/// (at least 2n, from the witness set), violations counts sets above 2n.
ScanResult nonpositive_set_search(Eigen::Index n, std::uint64_t trials, std::uint64_t seed);

struct ClassicalNoncommutingInstance {
    Ket psi;
    OrthonormalBasis a_basis;
    OrthonormalBasis f_basis;
};

/// Instances where state and observables pairwise fail to commute yet the
/// KD distribution is classical.  The two bundled d = 4 textbook instances
/// are emitted first, then randomized block constructions.
std::vector<ClassicalNoncommutingInstance> classical_noncommuting_search(Eigen::Index d,
                                                                         std::uint64_t samples,
                                                                         std::uint64_t seed);

struct JensenCheck {
    double sum = 0.0;
    bool saturated = false;
};

/// Σ_i |⟨b_i|ψ⟩| ≤ √d; saturated iff every overlap magnitude is 1/√d.
JensenCheck jensen_saturation_check(const OrthonormalBasis& basis, const Ket& psi);

}  // namespace kdq

#endif
