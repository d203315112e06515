#include <doctest.h>

#include "instances.hpp"
#include "kdq/json_io.hpp"

using namespace kdq;

TEST_CASE("kets and bases round-trip") {
    Ket psi = instances::ex4_state();
    Ket back = ket_from_json(ket_to_json(psi));
    CHECK((psi.amplitudes() - back.amplitudes()).norm() == 0.0);

    OrthonormalBasis f = instances::ex3_basis_f();
    OrthonormalBasis f_back = basis_from_json(basis_to_json(f));
    CHECK((f.columns() - f_back.columns()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("densities, partitions and distributions round-trip") {
    DensityOperator rho = DensityOperator::maximally_mixed(3);
    CHECK((density_from_json(density_to_json(rho)).matrix() - rho.matrix()).cwiseAbs().maxCoeff() ==
          0.0);

    EigenspacePartition part(4, {{0, 3}, {1}, {2}}, {0.5, 1.5, 2.5});
    EigenspacePartition part_back = partition_from_json(partition_to_json(part));
    CHECK(part_back.blocks() == part.blocks());
    CHECK(part_back.labels() == part.labels());

    auto dist = instances::ex4_dist();
    auto dist_back = distribution_from_json(distribution_to_json(dist));
    CHECK(dist_back.k() == dist.k());
    CHECK(dist_back.shape() == dist.shape());
    for (std::size_t i = 0; i < dist.values().size(); ++i)
        CHECK(dist_back.values()[i] == dist.values()[i]);
    CHECK_FALSE(dist_back.conditioned());

    auto cond = condition_on(instances::ex3_dist(), PostselectionOutcome{{0}});
    auto cond_back = distribution_from_json(distribution_to_json(cond));
    CHECK(cond_back.conditioned());
    CHECK(*cond_back.postselection_probability() == *cond.postselection_probability());
}

TEST_CASE("serialization is byte-deterministic") {
    auto dist = instances::ex3_dist();
    CHECK(distribution_to_json(dist).dump(2) == distribution_to_json(dist).dump(2));
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(complex_from_json(Json::array({1.0})), Error);
    CHECK_THROWS_AS(ket_from_json(Json{{"dim", 3}, {"amplitudes", Json::array()}}), Error);
    Json bad_basis = basis_to_json(OrthonormalBasis::computational(2));
    bad_basis["vectors"][0]["amplitudes"][0] = Json::array({0.5, 0.0});
    CHECK_THROWS_AS(basis_from_json(bad_basis), Error);  // not unit norm

    Json bad_dist = distribution_to_json(instances::ex4_dist());
    bad_dist["values"][0][0][0] = 0.9;  // entries no longer sum to 1
    CHECK_THROWS_AS(distribution_from_json(bad_dist), InvariantViolation);
}
