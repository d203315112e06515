#ifndef KDQ_TESTS_INSTANCES_HPP
#define KDQ_TESTS_INSTANCES_HPP

#include <cmath>

#include "kdq/kd.hpp"

// The four worked instances used across the test suites, matching the JSON
// fixtures shipped in fixtures/.
namespace instances {

using namespace kdq;

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// d = 4: state (|2> + |3>)/sqrt2, A computational,
// F = {(|0>+|1>)/sqrt2, (|0>-|1>)/sqrt2, |2>, |3>}.
inline Ket ex1_state() {
    Vector v = Vector::Zero(4);
    v(2) = kInvSqrt2;
    v(3) = kInvSqrt2;
    return Ket(std::move(v));
}

inline OrthonormalBasis ex1_basis_f() {
    Matrix f = Matrix::Zero(4, 4);
    f(0, 0) = kInvSqrt2; f(1, 0) = kInvSqrt2;
    f(0, 1) = kInvSqrt2; f(1, 1) = -kInvSqrt2;
    f(2, 2) = 1.0;
    f(3, 3) = 1.0;
    return OrthonormalBasis(std::move(f));
}

// The observables behind instance 1: A = diag(-2,-1,1,2) in the computational
// basis, F with eigenvalues (-2,-1,1,2) on the F basis above.
inline Eigen::VectorXd ex1_eigenvalues() {
    Eigen::VectorXd vals(4);
    vals << -2.0, -1.0, 1.0, 2.0;
    return vals;
}

// d = 4: uniform superposition state, A computational,
// F = {(|0>+-|1>)/sqrt2, (|2>+-|3>)/sqrt2}.
inline Ket ex2_state() { return Ket(Vector::Constant(4, Complex(0.5, 0))); }

inline OrthonormalBasis ex2_basis_f() {
    Matrix f = Matrix::Zero(4, 4);
    f(0, 0) = kInvSqrt2; f(1, 0) = kInvSqrt2;
    f(0, 1) = kInvSqrt2; f(1, 1) = -kInvSqrt2;
    f(2, 2) = kInvSqrt2; f(3, 2) = kInvSqrt2;
    f(2, 3) = kInvSqrt2; f(3, 3) = -kInvSqrt2;
    return OrthonormalBasis(std::move(f));
}

// Two qubits: state (|00>+|01>+|10>-|11>)/2, A computational,
// F = {|++>, |-+>, |+->, |-->}.
inline Ket ex3_state() {
    Vector v(4);
    v << 0.5, 0.5, 0.5, -0.5;
    return Ket(std::move(v));
}

inline OrthonormalBasis ex3_basis_f() {
    Matrix f(4, 4);
    f << 0.5, 0.5, 0.5, 0.5,
         0.5, 0.5, -0.5, -0.5,
         0.5, -0.5, 0.5, -0.5,
         0.5, -0.5, -0.5, 0.5;
    return OrthonormalBasis(std::move(f));
}

// Qubit: state (|0> + i|1>)/sqrt2, A the sigma_z basis, F the sigma_x basis.
inline Ket ex4_state() {
    Vector v(2);
    v << Complex(kInvSqrt2, 0), Complex(0, kInvSqrt2);
    return Ket(std::move(v));
}

inline OrthonormalBasis ex4_basis_f() {
    Matrix f(2, 2);
    f << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    return OrthonormalBasis(std::move(f));
}

inline KDDistribution ex1_dist() {
    return compute_kd(DensityOperator::from_ket(ex1_state()), OrthonormalBasis::computational(4),
                      ex1_basis_f());
}

inline KDDistribution ex2_dist() {
    return compute_kd(DensityOperator::from_ket(ex2_state()), OrthonormalBasis::computational(4),
                      ex2_basis_f());
}

inline KDDistribution ex3_dist() {
    return compute_kd(DensityOperator::from_ket(ex3_state()), OrthonormalBasis::computational(4),
                      ex3_basis_f());
}

inline KDDistribution ex4_dist() {
    return compute_kd(DensityOperator::from_ket(ex4_state()), OrthonormalBasis::computational(2),
                      ex4_basis_f());
}

}  // namespace instances

#endif
