#ifndef KDQ_MUBS_HPP
#define KDQ_MUBS_HPP

#include <utility>
#include <vector>

#include "kdq/core.hpp"

namespace kdq {

/// Family of pairwise mutually unbiased bases.
struct MubFamily {
    Eigen::Index dim;
    std::vector<OrthonormalBasis> bases;
    bool real_flag;  // all amplitudes real in the shared reference basis

    MubFamily(Eigen::Index d, std::vector<OrthonormalBasis> b, bool real);
};

/// Discrete-Fourier basis: f_j amplitudes exp(2πi·ij/d)/√d, unbiased with
/// the computational basis.
OrthonormalBasis fourier_basis(Eigen::Index d);

/// σ_z, σ_x, σ_y eigenbases (d = 2).
MubFamily pauli_mub_triplet();

/// Three pairwise-unbiased d = 4 bases with all-real amplitudes: the
/// computational basis, the Hadamard⊗Hadamard columns, and the
/// lexicographically smallest sign matrix S/2 found by exhaustive search.
MubFamily real_mub_triplet_d4();

bool is_mutually_unbiased(const OrthonormalBasis& b1, const OrthonormalBasis& b2);

/// A triplet of MUBs for d ∈ {2, 3, 4}, used to build bound-saturating
/// instances.
MubFamily mub_triplet_for(Eigen::Index d);

/// Bound-saturating instance: Ψ from the triplet's first basis, axis bases
/// alternating between the third and second members so adjacent pairs are
/// unbiased and both end bases are unbiased with Ψ.
std::pair<Ket, std::vector<OrthonormalBasis>> max_nonclassical_instance(const MubFamily& triplet,
                                                                        Eigen::Index k);

}  // namespace kdq

#endif
