#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kdq/channels.hpp"
#include "kdq/json_io.hpp"
#include "kdq/mubs.hpp"

namespace {

using kdq::Json;

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        kdq::write_json_file(out_path, j);
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::ios_base::failure("cannot open " + out_path + " for writing");
        out << text;
    }
}

std::vector<kdq::OrthonormalBasis> load_bases(const std::vector<std::string>& paths) {
    std::vector<kdq::OrthonormalBasis> bases;
    for (const auto& p : paths) bases.push_back(kdq::basis_from_json(kdq::load_json_file(p)));
    return bases;
}

// "lo:hi:step" inclusive of both ends up to rounding.
std::vector<double> parse_range(const std::string& sweep) {
    double lo = 0.0, hi = 1.0, step = 0.0;
    if (std::sscanf(sweep.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0.0)
        throw kdq::Error("malformed range, expected lo:hi:step with step > 0");
    std::vector<double> values;
    for (double p = lo; p <= hi + 1e-12; p += step) values.push_back(std::min(p, hi));
    return values;
}

int run(int argc, char** argv) {
    CLI::App app{"Kirkwood-Dirac quasiprobability toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    double tol_zero = kdq::default_tol_zero();
    std::uint64_t seed = 0;
    std::string format = "json";
    app.add_option("--tol-zero", tol_zero, "magnitude below which a value counts as zero");
    app.add_option("--seed", seed, "master RNG seed for randomized subcommands");
    app.add_option("--format", format, "output format (json or csv; csv for tabular output only)")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string state_path, out_path, dist_path, a_path, f_path;
    std::vector<std::string> basis_paths, coarse_paths;

    auto* compute = app.add_subcommand("compute", "KD distribution of a state over k bases");
    compute->add_option("--state", state_path)->required();
    compute->add_option("--basis", basis_paths)->required();
    compute->add_option("--coarse", coarse_paths,
                        "one partition (F blocks) or two (A then F blocks)");
    compute->add_option("-o,--output", out_path);

    auto* check = app.add_subcommand("check", "classicality verdict and support-count criteria");
    check->add_option("--state", state_path)->required();
    check->add_option("--basis", basis_paths)->required();
    check->add_option("--coarse", coarse_paths)->expected(2);

    auto* measures = app.add_subcommand("measures", "nonclassicality measures of a distribution");
    measures->add_option("--dist", dist_path)->required();

    std::string family;
    Eigen::Index dim = 2;
    auto* mub = app.add_subcommand("mub", "emit mutually unbiased basis families");
    mub->add_option("--family", family)->required()->check(CLI::IsMember({"fourier", "pauli", "real4"}));
    mub->add_option("--dim", dim);
    mub->add_option("-o,--output", out_path, "output directory (default .)");

    std::string kind;
    std::vector<Eigen::Index> block;
    auto* witness = app.add_subcommand("witness", "analytic witness eigenpairs");
    witness->add_option("--kind", kind)->required()->check(CLI::IsMember({"H", "G", "R", "S"}));
    witness->add_option("--a", a_path)->required();
    witness->add_option("--f", f_path)->required();
    witness->add_option("--block", block, "F-basis indices forming the eigenspace block (R/S)");
    witness->add_option("-o,--output", out_path);

    std::string p_range = "0:1:0.01";
    auto* sweep = app.add_subcommand("sweep", "depolarization sweep of the measures");
    sweep->add_option("--state", state_path)->required();
    sweep->add_option("--basis", basis_paths)->required();
    sweep->add_option("--p", p_range, "p values as lo:hi:step");
    sweep->add_option("-o,--output", out_path);

    std::vector<Eigen::Index> select;
    auto* condition = app.add_subcommand("condition", "condition on a last-axis outcome");
    condition->add_option("--state", state_path)->required();
    condition->add_option("--basis", basis_paths)->required();
    condition->add_option("--select", select, "retained indices of the last basis")->required();
    condition->add_option("-o,--output", out_path);

    std::string what;
    Eigen::Index k_axes = 2;
    std::uint64_t samples = 1000;
    auto* scan = app.add_subcommand("scan", "randomized falsification scans");
    scan->add_option("--what", what)->required()
        ->check(CLI::IsMember({"bound", "nonpositive", "classical-noncommuting"}));
    scan->add_option("--dim", dim)->required();
    scan->add_option("--k", k_axes);
    scan->add_option("--samples", samples);
    scan->add_option("-o,--output", out_path);

    auto* reconstruct = app.add_subcommand("reconstruct", "state from its KD distribution");
    reconstruct->add_option("--state", state_path)->required();
    reconstruct->add_option("--basis", basis_paths)->required();
    reconstruct->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (tol_zero <= 0.0) throw kdq::Error("tolerances must be positive");
    kdq::set_default_tol_zero(tol_zero);
    if (format == "csv" && !(sweep->parsed() || scan->parsed()))
        throw kdq::Error("csv output is restricted to sweep and scan");

    if (compute->parsed()) {
        auto state = kdq::density_from_json(kdq::load_json_file(state_path));
        auto bases = load_bases(basis_paths);
        if (coarse_paths.empty()) {
            emit(kdq::distribution_to_json(kdq::compute_extended_kd(state, bases)), out_path);
        } else if (bases.size() != 2) {
            throw kdq::Error("coarse graining needs exactly two bases");
        } else if (coarse_paths.size() == 1) {
            auto part_f = kdq::partition_from_json(kdq::load_json_file(coarse_paths[0]));
            emit(kdq::distribution_to_json(
                     kdq::one_sided_coarse_grain(state, bases[0], part_f, bases[1])),
                 out_path);
        } else if (coarse_paths.size() == 2) {
            auto part_a = kdq::partition_from_json(kdq::load_json_file(coarse_paths[0]));
            auto part_f = kdq::partition_from_json(kdq::load_json_file(coarse_paths[1]));
            emit(kdq::distribution_to_json(
                     kdq::coarse_grain(state, part_a, part_f, bases[0], bases[1])),
                 out_path);
        } else {
            throw kdq::Error("--coarse takes one or two partition files");
        }
        return 0;
    }

    if (check->parsed()) {
        auto state = kdq::density_from_json(kdq::load_json_file(state_path));
        auto bases = load_bases(basis_paths);
        if (bases.size() != 2) throw kdq::Error("check needs exactly two bases");
        Eigen::SelfAdjointEigenSolver<kdq::Matrix> solver(state.matrix());
        Eigen::Index argmax = 0;
        solver.eigenvalues().maxCoeff(&argmax);
        if (solver.eigenvalues().maxCoeff() < 1.0 - 1e-9)
            throw kdq::Error("support counts are defined for pure states");
        kdq::Ket psi(solver.eigenvectors().col(argmax));

        Json result;
        if (!coarse_paths.empty()) {
            auto part_a = kdq::partition_from_json(kdq::load_json_file(coarse_paths[0]));
            auto part_f = kdq::partition_from_json(kdq::load_json_file(coarse_paths[1]));
            auto dist = kdq::coarse_grain(state, part_a, part_f, bases[0], bases[1]);
            auto counts =
                kdq::coarse_support_counts(psi, part_a, part_f, bases[0], bases[1]);
            result["verdict"] = kdq::verdict_to_json(kdq::classify(dist));
            result["counts"] = kdq::counts_to_json(counts);
            result["coarse_thm"] = kdq::coarse_thm_check(counts);
            result["corollary2"] = kdq::corollary2_check(dist, part_a, part_f);
        } else {
            auto dist = kdq::compute_kd(state, bases[0], bases[1]);
            auto counts = kdq::support_counts(psi, bases[0], bases[1]);
            // Generic distinct eigenvalues 0..d-1; commutators depend only on
            // the eigenbases when the spectra are nondegenerate.
            Eigen::VectorXd eigenvalues(state.dim());
            for (Eigen::Index i = 0; i < state.dim(); ++i) eigenvalues(i) = double(i);
            result["verdict"] = kdq::verdict_to_json(kdq::classify(dist));
            result["counts"] = kdq::counts_to_json(counts);
            result["thm1"] = kdq::thm1_to_json(kdq::thm1_check(counts));
            result["corollary1"] = kdq::corollary1_check(dist);
            result["commutators"] = kdq::commutators_to_json(kdq::commutation_report(
                state, kdq::Observable(bases[0], eigenvalues),
                kdq::Observable(bases[1], eigenvalues)));
        }
        emit(result, out_path);
        return 0;
    }

    if (measures->parsed()) {
        auto dist = kdq::distribution_from_json(kdq::load_json_file(dist_path));
        emit(kdq::report_to_json(kdq::nonclassicality_measures(dist)), out_path);
        return 0;
    }

    if (mub->parsed()) {
        std::vector<kdq::OrthonormalBasis> bases;
        if (family == "fourier") {
            bases.push_back(kdq::OrthonormalBasis::computational(dim));
            bases.push_back(kdq::fourier_basis(dim));
        } else if (family == "pauli") {
            bases = kdq::pauli_mub_triplet().bases;
        } else {
            bases = kdq::real_mub_triplet_d4().bases;
        }
        std::string dir = out_path.empty() ? "." : out_path;
        for (std::size_t i = 0; i < bases.size(); ++i) {
            std::string path = dir + "/mub_" + family + "_" + std::to_string(i) + ".json";
            kdq::write_json_file(path, kdq::basis_to_json(bases[i]));
            std::cout << path << '\n';
        }
        return 0;
    }

    if (witness->parsed()) {
        auto a = kdq::ket_from_json(kdq::load_json_file(a_path));
        kdq::WitnessEigenpairs pairs = [&] {
            if (kind == "H" || kind == "G") {
                auto f = kdq::ket_from_json(kdq::load_json_file(f_path));
                return kind == "H" ? kdq::imag_witness(a, f) : kdq::real_witness(a, f);
            }
            auto f_basis = kdq::basis_from_json(kdq::load_json_file(f_path));
            if (block.empty()) throw kdq::Error("R/S witnesses need --block indices");
            kdq::Matrix f_block = kdq::Matrix::Zero(f_basis.dim(), f_basis.dim());
            for (Eigen::Index i : block) f_block += kdq::projector(f_basis, i);
            return kind == "R" ? kdq::coarse_imag_witness(a, f_block)
                               : kdq::coarse_real_witness(a, f_block);
        }();
        emit(kdq::eigenpairs_to_json(pairs), out_path);
        return 0;
    }

    if (sweep->parsed()) {
        auto state = kdq::density_from_json(kdq::load_json_file(state_path));
        auto bases = load_bases(basis_paths);
        if (bases.size() != 2) throw kdq::Error("sweep needs exactly two bases");
        auto result = kdq::depolarization_sweep(state, bases[0], bases[1], parse_range(p_range));
        std::ostringstream csv;
        csv << "p,total,negativity,imaginarity\n";
        csv.precision(17);
        for (std::size_t i = 0; i < result.p_values.size(); ++i)
            csv << result.p_values[i] << ',' << result.reports[i].total << ','
                << result.reports[i].negativity << ',' << result.reports[i].imaginarity << '\n';
        emit_text(csv.str(), out_path);
        return 0;
    }

    if (condition->parsed()) {
        auto state = kdq::density_from_json(kdq::load_json_file(state_path));
        auto bases = load_bases(basis_paths);
        auto dist = kdq::compute_extended_kd(state, bases);
        emit(kdq::distribution_to_json(kdq::condition_on(dist, kdq::PostselectionOutcome{select})),
             out_path);
        return 0;
    }

    if (scan->parsed()) {
        kdq::ScanResult result;
        if (what == "bound")
            result = kdq::bound_scan(dim, k_axes, samples, seed);
        else if (what == "nonpositive")
            result = kdq::nonpositive_set_search(dim, samples, seed);
        else {
            auto instances = kdq::classical_noncommuting_search(dim, samples, seed);
            result.samples = samples;
            result.seed = seed;
            result.max_observed = static_cast<double>(instances.size());
        }
        if (format == "csv") {
            std::ostringstream csv;
            csv << "samples,max_observed,violations,seed\n";
            csv.precision(17);
            csv << result.samples << ',' << result.max_observed << ',' << result.violations << ','
                << result.seed << '\n';
            emit_text(csv.str(), out_path);
        } else {
            emit(kdq::scan_to_json(result), out_path);
        }
        return 0;
    }

    if (reconstruct->parsed()) {
        auto state = kdq::density_from_json(kdq::load_json_file(state_path));
        auto bases = load_bases(basis_paths);
        auto dist = kdq::compute_extended_kd(state, bases);
        auto rec = kdq::reconstruct_state(dist);
        Json cells = Json::array();
        for (const auto& [i, j] : rec.convention_cells) cells.push_back(Json::array({i, j}));
        double err = (rec.state.matrix() - state.matrix()).cwiseAbs().maxCoeff();
        emit(Json{{"state", kdq::density_to_json(rec.state)},
                  {"convention_cells", std::move(cells)},
                  {"roundtrip_error", err}},
             out_path);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const kdq::Error& e) {
        std::cerr << Json{{"error", e.what()},
                          {"type", dynamic_cast<const kdq::InvariantViolation*>(&e)
                                       ? "invariant_violation"
                                       : dynamic_cast<const kdq::DimensionMismatch*>(&e)
                                             ? "dimension_mismatch"
                                             : "domain_error"}}
                         .dump()
                  << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}, {"type", "io_or_parse"}}.dump() << '\n';
        return 2;
    }
}
