#include <doctest.h>

#include <cmath>

#include "instances.hpp"
#include "kdq/channels.hpp"
#include "kdq/classicality.hpp"

using namespace kdq;

TEST_CASE("depolarization endpoints and validation") {
    auto rho = DensityOperator::from_ket(instances::ex4_state());
    CHECK((depolarize(rho, 1.0).matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((depolarize(rho, 0.0).matrix() - DensityOperator::maximally_mixed(2).matrix())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
    CHECK_THROWS_AS(depolarize(rho, -0.1), Error);
    CHECK_THROWS_AS(depolarize(rho, 1.1), Error);
}

TEST_CASE("depolarized entries interpolate between the pure table and the Gram term") {
    Rng rng(61);
    for (Eigen::Index d : {2, 3, 4}) {
        DensityOperator rho = DensityOperator::from_ket(haar_random_ket(d, rng));
        auto a = haar_random_basis(d, rng);
        auto f = haar_random_basis(d, rng);
        Matrix pure = compute_kd(rho, a, f).as_matrix();
        Matrix gram = f.columns().adjoint() * a.columns();
        for (double p : {0.0, 0.3, 0.8, 1.0}) {
            Matrix noisy = compute_kd(depolarize(rho, p), a, f).as_matrix();
            for (Eigen::Index i = 0; i < d; ++i)
                for (Eigen::Index j = 0; j < d; ++j) {
                    Complex expected = p * pure(i, j) +
                                       (1.0 - p) / d * std::norm(gram(j, i));
                    CHECK(std::abs(noisy(i, j) - expected) < 1e-12);
                }
        }
    }
}

TEST_CASE("convex mixing validates weights and dilutes nonclassicality") {
    auto rho_a = DensityOperator::from_ket(Ket::basis_state(2, 0));
    auto rho_b = DensityOperator::from_ket(Ket::basis_state(2, 1));
    CHECK_THROWS_AS(convex_mix({rho_a, rho_b}, {0.5}), Error);
    CHECK_THROWS_AS(convex_mix({rho_a, rho_b}, {0.7, 0.7}), Error);
    CHECK_THROWS_AS(convex_mix({rho_a, rho_b}, {1.5, -0.5}), Error);
    CHECK((convex_mix({rho_a, rho_b}, {0.5, 0.5}).matrix() -
           DensityOperator::maximally_mixed(2).matrix())
              .cwiseAbs()
              .maxCoeff() < 1e-14);

    Rng rng(67);
    auto a = haar_random_basis(3, rng);
    auto f = haar_random_basis(3, rng);
    for (int i = 0; i < 30; ++i) {
        auto r1 = DensityOperator::from_ket(haar_random_ket(3, rng));
        auto r2 = DensityOperator::from_ket(haar_random_ket(3, rng));
        double w = 0.5 + 0.4 * std::sin(double(i));
        double n_mix =
            nonclassicality_measures(compute_kd(convex_mix({r1, r2}, {w, 1 - w}), a, f)).total;
        double n1 = nonclassicality_measures(compute_kd(r1, a, f)).total;
        double n2 = nonclassicality_measures(compute_kd(r2, a, f)).total;
        CHECK(n_mix <= w * n1 + (1 - w) * n2 + 1e-9);
    }
}

TEST_CASE("the 2/3 - 1/3 qubit mixture is classical though its components are not") {
    const double c3 = std::cos(M_PI / 3), s3 = std::sin(M_PI / 3);
    Matrix f_cols(2, 2);
    f_cols << c3, -s3, s3, c3;
    OrthonormalBasis f(std::move(f_cols));
    auto a = OrthonormalBasis::computational(2);

    Vector plus(2), minus(2);
    plus << instances::kInvSqrt2, instances::kInvSqrt2;
    minus << instances::kInvSqrt2, -instances::kInvSqrt2;
    auto rho_plus = DensityOperator::from_ket(Ket(plus));
    auto rho_minus = DensityOperator::from_ket(Ket(minus));

    CHECK_FALSE(classify(compute_kd(rho_plus, a, f)).classical());
    CHECK_FALSE(classify(compute_kd(rho_minus, a, f)).classical());
    auto mixed = convex_mix({rho_plus, rho_minus}, {2.0 / 3.0, 1.0 / 3.0});
    CHECK(classify(compute_kd(mixed, a, f)).classical());
}

TEST_CASE("sweeps obey the dilution relations") {
    std::vector<double> ps;
    for (int i = 0; i <= 100; ++i) ps.push_back(i / 100.0);

    auto a2 = OrthonormalBasis::computational(2);
    auto sweep4 = depolarization_sweep(DensityOperator::from_ket(instances::ex4_state()), a2,
                                       instances::ex4_basis_f(), ps);
    double imag1 = sweep4.reports.back().imaginarity;
    CHECK(std::abs(imag1 - 1.0) < 1e-10);
    for (std::size_t i = 0; i < ps.size(); ++i)
        CHECK(std::abs(sweep4.reports[i].imaginarity - ps[i] * imag1) < 1e-10);
    CHECK(std::abs(sweep4.reports.front().total) < 1e-10);
    CHECK_FALSE(sweep4.threshold.has_value());  // no negativity at any p

    auto a4 = OrthonormalBasis::computational(4);
    auto sweep3 = depolarization_sweep(DensityOperator::from_ket(instances::ex3_state()), a4,
                                       instances::ex3_basis_f(), ps);
    CHECK(sweep3.threshold.has_value());
    CHECK(*sweep3.threshold < 1.0);
    CHECK(*sweep3.threshold > 0.0);
    for (const auto& r : sweep3.reports) CHECK(r.imaginarity < 1e-10);
}

TEST_CASE("bisection threshold agrees with the analytic per-entry crossing") {
    auto rho = DensityOperator::from_ket(instances::ex3_state());
    auto a = OrthonormalBasis::computational(4);
    auto f = instances::ex3_basis_f();
    auto threshold = negativity_threshold(rho, a, f);
    REQUIRE(threshold.has_value());

    // Re q_ij(p) = p r0_ij + (1-p) g_ij with g_ij = |<f_j|a_i>|^2/d >= 0;
    // the entry crosses zero at p = g/(g - r0), and the distribution stays
    // negativity-free up to the smallest crossing among negative entries.
    Matrix pure = compute_kd(rho, a, f).as_matrix();
    Matrix gram = f.columns().adjoint() * a.columns();
    double analytic = 1.0;
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) {
            double r0 = pure(i, j).real();
            if (r0 >= 0) continue;
            double g = std::norm(gram(j, i)) / 4.0;
            analytic = std::min(analytic, g / (g - r0));
        }
    CHECK(std::abs(*threshold - analytic) < 1e-7);
}
