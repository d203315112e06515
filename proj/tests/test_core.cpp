#include <doctest.h>

#include <cmath>

#include "kdq/core.hpp"

using namespace kdq;

TEST_CASE("ket construction enforces unit norm") {
    Vector good(2);
    good << Complex(1, 0), Complex(0, 0);
    CHECK_NOTHROW(Ket{good});

    Vector bad(2);
    bad << Complex(1, 0), Complex(1, 0);
    CHECK_THROWS_AS(Ket{bad}, InvariantViolation);

    Ket e1 = Ket::basis_state(4, 1);
    CHECK(e1.dim() == 4);
    CHECK(e1[1] == Complex(1, 0));
    CHECK(e1[0] == Complex(0, 0));
}

TEST_CASE("density operator invariants") {
    CHECK_NOTHROW(DensityOperator::maximally_mixed(3));
    CHECK(DensityOperator::maximally_mixed(4).purity() == doctest::Approx(0.25));
    CHECK(DensityOperator::from_ket(Ket::basis_state(2, 0)).purity() == doctest::Approx(1.0));

    Matrix not_hermitian(2, 2);
    not_hermitian << Complex(0.5, 0), Complex(0.1, 0.2), Complex(0.3, 0.1), Complex(0.5, 0);
    CHECK_THROWS_AS(DensityOperator{not_hermitian}, InvariantViolation);

    Matrix wrong_trace = 2.0 * Matrix::Identity(2, 2);
    CHECK_THROWS_AS(DensityOperator{wrong_trace}, InvariantViolation);

    Matrix indefinite(2, 2);
    indefinite << Complex(1.5, 0), Complex(0, 0), Complex(0, 0), Complex(-0.5, 0);
    CHECK_THROWS_AS(DensityOperator{indefinite}, InvariantViolation);
}

TEST_CASE("orthonormal basis validation") {
    CHECK_NOTHROW(OrthonormalBasis::computational(5));
    Matrix skew(2, 2);
    skew << Complex(1, 0), Complex(1, 0), Complex(0, 0), Complex(1, 0);
    CHECK_THROWS_AS(OrthonormalBasis{skew}, InvariantViolation);
}

TEST_CASE("eigenspace partition validation") {
    CHECK_NOTHROW(EigenspacePartition(3, {{0, 1}, {2}}, {1.0, 2.0}));
    CHECK(EigenspacePartition::singletons(3).all_singletons());
    CHECK_FALSE(EigenspacePartition(3, {{0, 1}, {2}}, {1.0, 2.0}).all_singletons());
    // overlapping blocks
    CHECK_THROWS_AS(EigenspacePartition(3, {{0, 1}, {1, 2}}, {1.0, 2.0}), InvariantViolation);
    // index 2 uncovered
    CHECK_THROWS_AS(EigenspacePartition(3, {{0, 1}}, {1.0}), InvariantViolation);
    // duplicate labels
    CHECK_THROWS_AS(EigenspacePartition(3, {{0, 1}, {2}}, {1.0, 1.0}), InvariantViolation);
}

TEST_CASE("inner product and projectors") {
    Ket a = Ket::basis_state(2, 0);
    Vector v(2);
    v << Complex(0, 0), Complex(0, 1);
    Ket b(v);
    CHECK(std::abs(inner_product(a, b)) == doctest::Approx(0.0));
    CHECK(inner_product(b, b) == Complex(1, 0));

    Matrix p = projector(OrthonormalBasis::computational(2), 1);
    CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(p.trace() == Complex(1, 0));
}

TEST_CASE("haar unitaries are unitary and seed-deterministic") {
    Rng rng1(42), rng2(42);
    for (Eigen::Index d : {2, 3, 4, 8}) {
        Matrix u = haar_random_unitary(d, rng1);
        CHECK((u.adjoint() * u - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
        Matrix v = haar_random_unitary(d, rng2);
        CHECK((u - v).cwiseAbs().maxCoeff() == 0.0);
    }
    Rng rng3(42);
    CHECK(std::abs(haar_random_ket(3, rng3).amplitudes().norm() - 1.0) < 1e-12);
}

TEST_CASE("haar first moment matches the analytic value") {
    // E[|u_00|^2] = 1/d for Haar-distributed unitaries; Monte-Carlo check.
    Rng rng(7);
    const int n = 4000;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        Matrix u = haar_random_unitary(4, rng);
        acc += std::norm(u(0, 0));
    }
    CHECK(std::abs(acc / n - 0.25) < 0.02);
}

TEST_CASE("default zero tolerance is adjustable") {
    double original = default_tol_zero();
    CHECK(original == doctest::Approx(1e-9));
    set_default_tol_zero(1e-7);
    CHECK(default_tol_zero() == doctest::Approx(1e-7));
    set_default_tol_zero(original);
}
