#ifndef KDQ_JSON_IO_HPP
#define KDQ_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "kdq/classicality.hpp"
#include "kdq/kd.hpp"
#include "kdq/measures.hpp"
#include "kdq/oracle.hpp"
#include "kdq/witness.hpp"

namespace kdq {

using Json = nlohmann::ordered_json;

// Conventions: a complex scalar is [re, im]; a Ket is {"dim", "amplitudes"};
// a matrix is row-major nested arrays of [re, im]; a basis is
// {"dim", "vectors": [Ket, ...]}; a partition is {"dim", "blocks", "labels"}.

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json ket_to_json(const Ket& psi);
Ket ket_from_json(const Json& j);

Json basis_to_json(const OrthonormalBasis& basis);
OrthonormalBasis basis_from_json(const Json& j);

Json partition_to_json(const EigenspacePartition& part);
EigenspacePartition partition_from_json(const Json& j);

Json density_to_json(const DensityOperator& state);
DensityOperator density_from_json(const Json& j);

Json distribution_to_json(const KDDistribution& dist);
/// Bases and the source state are not serialized, so the round-tripped
/// distribution supports measures and classification but not conditioning
/// cross-checks or reconstruction conventions that need them.
KDDistribution distribution_from_json(const Json& j);

Json report_to_json(const NonclassicalityReport& report);
Json counts_to_json(const SupportCounts& counts);
Json verdict_to_json(const Verdict& verdict);
Json thm1_to_json(const Thm1Result& result);
Json commutators_to_json(const CommutationReport& report);
Json eigenpairs_to_json(const WitnessEigenpairs& pairs);
Json scan_to_json(const ScanResult& result);

/// Parses a file; propagates nlohmann parse errors for I/O-level failures.
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace kdq

#endif
