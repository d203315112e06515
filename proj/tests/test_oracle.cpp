#include <doctest.h>

#include <cmath>

#include "instances.hpp"
#include "kdq/classicality.hpp"
#include "kdq/measures.hpp"
#include "kdq/oracle.hpp"

using namespace kdq;

TEST_CASE("trace evaluation agrees with the inner-product path") {
    Rng rng(71);
    for (Eigen::Index d : {2, 3, 4}) {
        for (Eigen::Index k : {2, 3}) {
            for (int i = 0; i < 25; ++i) {
                DensityOperator rho = DensityOperator::from_ket(haar_random_ket(d, rng));
                std::vector<OrthonormalBasis> bases;
                for (Eigen::Index m = 0; m < k; ++m) bases.push_back(haar_random_basis(d, rng));
                auto fast = compute_extended_kd(rho, bases);
                auto slow = kd_by_trace(rho, bases);
                REQUIRE(fast.values().size() == slow.size());
                for (std::size_t n = 0; n < slow.size(); ++n)
                    CHECK(std::abs(fast.values()[n] - slow[n]) < 1e-10);
            }
        }
    }
}

TEST_CASE("trace evaluation reproduces the reference tables") {
    auto check_table = [](const KDDistribution& dist, const DensityOperator& rho,
                          const std::vector<OrthonormalBasis>& bases) {
        auto slow = kd_by_trace(rho, bases);
        for (std::size_t n = 0; n < slow.size(); ++n)
            CHECK(std::abs(dist.values()[n] - slow[n]) < 1e-12);
    };
    check_table(instances::ex1_dist(), DensityOperator::from_ket(instances::ex1_state()),
                {OrthonormalBasis::computational(4), instances::ex1_basis_f()});
    check_table(instances::ex4_dist(), DensityOperator::from_ket(instances::ex4_state()),
                {OrthonormalBasis::computational(2), instances::ex4_basis_f()});
}

TEST_CASE("coarse trace evaluation agrees with block summation") {
    Rng rng(73);
    DensityOperator rho = DensityOperator::from_ket(haar_random_ket(4, rng));
    auto a = haar_random_basis(4, rng);
    auto f = haar_random_basis(4, rng);
    EigenspacePartition part_a(4, {{0, 2}, {1, 3}}, {0.0, 1.0});
    EigenspacePartition part_f(4, {{0}, {1, 2, 3}}, {0.0, 1.0});
    auto fast = coarse_grain(rho, part_a, part_f, a, f);
    auto slow = kd_by_trace_coarse(rho, part_a, part_f, a, f);
    for (std::size_t n = 0; n < slow.size(); ++n)
        CHECK(std::abs(fast.values()[n] - slow[n]) < 1e-10);
}

TEST_CASE("bound scans stay under the bound and injection saturates it") {
    ScanResult plain = bound_scan(2, 2, 2000, 101);
    CHECK(plain.violations == 0);
    CHECK(plain.max_observed <= std::sqrt(2.0) - 1.0 + 1e-9);
    // determinism across runs
    CHECK(bound_scan(2, 2, 2000, 101).max_observed == plain.max_observed);

    for (Eigen::Index d : {2, 3, 4}) {
        ScanResult injected = bound_scan(d, 2, 50, 5, /*inject_saturating=*/true);
        CHECK(injected.violations == 0);
        CHECK(std::abs(injected.max_observed - thm2_bound(d, 2)) < 1e-8);
    }
}

TEST_CASE("nonpositive vector sets cap at twice the dimension") {
    auto witness1 = nonpositive_witness_set(1);
    CHECK(witness1.size() == 2);
    CHECK(witness1[0](0) == Complex(1, 0));
    CHECK(witness1[1](0) == Complex(-1, 0));

    auto witness3 = nonpositive_witness_set(3);
    CHECK(witness3.size() == 6);
    for (std::size_t i = 0; i < witness3.size(); ++i)
        for (std::size_t j = i + 1; j < witness3.size(); ++j) {
            Complex ip = witness3[i].dot(witness3[j]);
            CHECK(ip.real() <= 1e-12);
            CHECK(std::abs(ip.imag()) <= 1e-12);
        }

    for (Eigen::Index n : {1, 2, 3}) {
        ScanResult search = nonpositive_set_search(n, 2000, 211);
        CHECK(search.violations == 0);
        CHECK(search.max_observed == doctest::Approx(2.0 * n));
    }
}

TEST_CASE("classical yet noncommuting instances exist and verify") {
    auto found = classical_noncommuting_search(4, 40, 307);
    CHECK(found.size() >= 3);  // the two seeded instances plus random hits

    Eigen::VectorXd vals(4);
    vals << 0, 1, 2, 3;
    for (const auto& inst : found) {
        DensityOperator rho = DensityOperator::from_ket(inst.psi);
        CHECK(classify(compute_kd(rho, inst.a_basis, inst.f_basis)).classical());
        CHECK_FALSE(commutation_report(rho, Observable(inst.a_basis, vals),
                                       Observable(inst.f_basis, vals))
                        .any_commute());
    }

    // seeded instance zero matches the worked d = 4 instance
    CHECK((found[0].psi.amplitudes() - instances::ex1_state().amplitudes()).norm() < 1e-12);
    CHECK((found[0].f_basis.columns() - instances::ex1_basis_f().columns()).cwiseAbs().maxCoeff() <
          1e-12);

    CHECK_THROWS_AS(classical_noncommuting_search(2, 5, 1), Error);
    CHECK(!classical_noncommuting_search(3, 60, 11).empty());
}

TEST_CASE("sum of basis overlaps obeys the sqrt-d cap") {
    auto comp = OrthonormalBasis::computational(4);
    JensenCheck basis_elem = jensen_saturation_check(comp, Ket::basis_state(4, 2));
    CHECK(basis_elem.sum == doctest::Approx(1.0));
    CHECK_FALSE(basis_elem.saturated);

    JensenCheck unbiased = jensen_saturation_check(comp, instances::ex2_state());
    CHECK(unbiased.sum == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(unbiased.saturated);

    Rng rng(79);
    for (int i = 0; i < 200; ++i) {
        JensenCheck random = jensen_saturation_check(comp, haar_random_ket(4, rng));
        CHECK(random.sum <= 2.0 + 1e-9);
    }
}
