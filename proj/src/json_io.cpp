#include "kdq/json_io.hpp"

#include <fstream>

namespace kdq {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw Error("complex value must be a 2-array [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error("matrix must be a non-empty nested array");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (static_cast<Eigen::Index>(j[r].size()) != cols)
            throw Error("matrix rows have inconsistent lengths");
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

Json ket_to_json(const Ket& psi) {
    Json amps = Json::array();
    for (Eigen::Index i = 0; i < psi.dim(); ++i) amps.push_back(complex_to_json(psi[i]));
    return Json{{"dim", psi.dim()}, {"amplitudes", std::move(amps)}};
}

Ket ket_from_json(const Json& j) {
    const auto& amps = j.at("amplitudes");
    Vector v(static_cast<Eigen::Index>(amps.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = complex_from_json(amps[i]);
    if (j.at("dim").get<Eigen::Index>() != v.size())
        throw DimensionMismatch("ket: dim field disagrees with amplitude count");
    return Ket(std::move(v));
}

Json basis_to_json(const OrthonormalBasis& basis) {
    Json vectors = Json::array();
    for (Eigen::Index i = 0; i < basis.dim(); ++i) vectors.push_back(ket_to_json(basis.vector(i)));
    return Json{{"dim", basis.dim()}, {"vectors", std::move(vectors)}};
}

OrthonormalBasis basis_from_json(const Json& j) {
    const auto& vectors = j.at("vectors");
    const Eigen::Index d = j.at("dim").get<Eigen::Index>();
    if (static_cast<Eigen::Index>(vectors.size()) != d)
        throw DimensionMismatch("basis: need exactly dim vectors");
    Matrix cols(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        Ket v = ket_from_json(vectors[i]);
        if (v.dim() != d) throw DimensionMismatch("basis: vector dimension mismatch");
        cols.col(i) = v.amplitudes();
    }
    return OrthonormalBasis(std::move(cols));
}

Json partition_to_json(const EigenspacePartition& part) {
    Json blocks = Json::array();
    for (const auto& block : part.blocks()) blocks.push_back(block);
    return Json{{"dim", part.dim()}, {"blocks", std::move(blocks)}, {"labels", part.labels()}};
}

EigenspacePartition partition_from_json(const Json& j) {
    std::vector<std::vector<Eigen::Index>> blocks;
    for (const auto& block : j.at("blocks"))
        blocks.push_back(block.get<std::vector<Eigen::Index>>());
    return EigenspacePartition(j.at("dim").get<Eigen::Index>(), std::move(blocks),
                               j.at("labels").get<std::vector<double>>());
}

Json density_to_json(const DensityOperator& state) {
    return Json{{"dim", state.dim()}, {"matrix", matrix_to_json(state.matrix())}};
}

DensityOperator density_from_json(const Json& j) {
    if (j.contains("amplitudes")) return DensityOperator::from_ket(ket_from_json(j));
    Matrix m = matrix_from_json(j.at("matrix"));
    if (j.contains("dim") && j.at("dim").get<Eigen::Index>() != m.rows())
        throw DimensionMismatch("density operator: dim field disagrees with matrix size");
    return DensityOperator(std::move(m));
}

namespace {

Json values_to_nested(const std::vector<Complex>& values, const std::vector<Eigen::Index>& shape,
                      std::size_t axis, std::size_t& cursor) {
    Json out = Json::array();
    if (axis + 1 == shape.size()) {
        for (Eigen::Index i = 0; i < shape[axis]; ++i) out.push_back(complex_to_json(values[cursor++]));
    } else {
        for (Eigen::Index i = 0; i < shape[axis]; ++i)
            out.push_back(values_to_nested(values, shape, axis + 1, cursor));
    }
    return out;
}

void values_from_nested(const Json& j, const std::vector<Eigen::Index>& shape, std::size_t axis,
                        std::vector<Complex>& out) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != shape[axis])
        throw Error("distribution values do not match the declared shape");
    if (axis + 1 == shape.size()) {
        for (const auto& cell : j) out.push_back(complex_from_json(cell));
    } else {
        for (const auto& sub : j) values_from_nested(sub, shape, axis + 1, out);
    }
}

}  // namespace

Json distribution_to_json(const KDDistribution& dist) {
    std::size_t cursor = 0;
    Json values = values_to_nested(dist.values(), dist.shape(), 0, cursor);
    Json j{{"k", dist.k()},
           {"shape", dist.shape()},
           {"values", std::move(values)},
           {"conditioned", dist.conditioned()}};
    if (dist.postselection_probability())
        j["postselection_probability"] = *dist.postselection_probability();
    else
        j["postselection_probability"] = nullptr;
    return j;
}

KDDistribution distribution_from_json(const Json& j) {
    auto shape = j.at("shape").get<std::vector<Eigen::Index>>();
    if (j.at("k").get<Eigen::Index>() != static_cast<Eigen::Index>(shape.size()))
        throw Error("distribution: k field disagrees with shape length");
    std::vector<Complex> values;
    values_from_nested(j.at("values"), shape, 0, values);
    std::optional<double> p;
    if (j.contains("postselection_probability") && !j.at("postselection_probability").is_null())
        p = j.at("postselection_probability").get<double>();
    bool conditioned = j.value("conditioned", false);
    return KDDistribution(std::move(shape), std::move(values), {}, std::nullopt, conditioned, p);
}

Json report_to_json(const NonclassicalityReport& report) {
    return Json{{"total", report.total},
                {"negativity", report.negativity},
                {"imaginarity", report.imaginarity},
                {"bound", report.bound},
                {"saturates_bound", report.saturates_bound}};
}

Json counts_to_json(const SupportCounts& counts) {
    return Json{{"d", counts.d},          {"n_a", counts.n_a},
                {"n_f", counts.n_f},      {"n_par", counts.n_par},
                {"n_bar_par", counts.n_bar_par}, {"coarse", counts.coarse},
                {"lhs", counts.lhs()},    {"rhs", counts.rhs()}};
}

Json verdict_to_json(const Verdict& verdict) {
    static const char* names[] = {"Classical", "Negative", "Nonreal", "NegativeAndNonreal"};
    return Json{{"label", names[static_cast<int>(verdict.label)]},
                {"max_negative_real", verdict.max_negative_real},
                {"max_abs_imag", verdict.max_abs_imag},
                {"zero_count", verdict.zero_count}};
}

Json thm1_to_json(const Thm1Result& result) {
    return Json{{"certified_nonclassical", result.certified_nonclassical},
                {"saturated", result.saturated},
                {"lhs", result.lhs},
                {"rhs", result.rhs}};
}

Json commutators_to_json(const CommutationReport& report) {
    return Json{{"rho_a_commute", report.rho_a_commute},
                {"rho_f_commute", report.rho_f_commute},
                {"a_f_commute", report.a_f_commute}};
}

Json eigenpairs_to_json(const WitnessEigenpairs& pairs) {
    static const char* kinds[] = {"H", "G", "R", "S"};
    return Json{{"kind", kinds[static_cast<int>(pairs.kind)]},
                {"operator", matrix_to_json(pairs.op)},
                {"lambda_plus", pairs.lambda_plus},
                {"lambda_minus", pairs.lambda_minus},
                {"v_plus", ket_to_json(pairs.v_plus)},
                {"v_minus", ket_to_json(pairs.v_minus)}};
}

Json scan_to_json(const ScanResult& result) {
    return Json{{"samples", result.samples},
                {"max_observed", result.max_observed},
                {"violations", result.violations},
                {"seed", result.seed}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return Json::parse(in);
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

}  // namespace kdq
