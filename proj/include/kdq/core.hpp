#ifndef KDQ_CORE_HPP
#define KDQ_CORE_HPP

#include <random>

#include "kdq/types.hpp"

namespace kdq {

using Rng = std::mt19937_64;

/// ⟨u|v⟩ with conjugation on the first argument.
Complex inner_product(const Ket& u, const Ket& v);

/// Rank-1 projector |b_i⟩⟨b_i| onto the i-th basis vector.
Matrix projector(const OrthonormalBasis& basis, Eigen::Index index);

/// Haar-distributed unitary via QR of a complex Gaussian matrix with the
/// R diagonal phases absorbed into Q.
Matrix haar_random_unitary(Eigen::Index d, Rng& rng);

Ket haar_random_ket(Eigen::Index d, Rng& rng);

OrthonormalBasis haar_random_basis(Eigen::Index d, Rng& rng);

/// Dense Hermitian matrix Σ_i a_i |b_i⟩⟨b_i| of an observable.
Matrix observable_matrix(const Observable& obs);

}  // namespace kdq

#endif
