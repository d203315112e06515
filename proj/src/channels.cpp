#include "kdq/channels.hpp"

#include <cmath>

namespace kdq {

DensityOperator depolarize(const DensityOperator& state, double p) {
    if (p < 0.0 || p > 1.0) throw Error("depolarize: p must lie in [0, 1]");
    const Eigen::Index d = state.dim();
    Matrix m = p * state.matrix() + (1.0 - p) / static_cast<double>(d) * Matrix::Identity(d, d);
    return DensityOperator(std::move(m));
}

DensityOperator convex_mix(const std::vector<DensityOperator>& states,
                           const std::vector<double>& weights) {
    if (states.empty() || states.size() != weights.size())
        throw Error("convex_mix: need one weight per state");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw Error("convex_mix: weights must be non-negative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-10) throw Error("convex_mix: weights must sum to 1");
    const Eigen::Index d = states.front().dim();
    Matrix m = Matrix::Zero(d, d);
    for (std::size_t n = 0; n < states.size(); ++n) {
        if (states[n].dim() != d) throw DimensionMismatch("convex_mix: dimension mismatch");
        m += weights[n] * states[n].matrix();
    }
    return DensityOperator(std::move(m));
}

namespace {

double negativity_at(const DensityOperator& state0, const OrthonormalBasis& A,
                     const OrthonormalBasis& F, double p) {
    return nonclassicality_measures(compute_kd(depolarize(state0, p), A, F)).negativity;
}

}  // namespace

std::optional<double> negativity_threshold(const DensityOperator& state0,
                                           const OrthonormalBasis& A, const OrthonormalBasis& F) {
    constexpr double kNegligible = 1e-10;
    if (negativity_at(state0, A, F, 1.0) <= kNegligible) return std::nullopt;
    // Each Re(q) is affine in p, so {p : no negative entry} is an interval
    // containing p = 0 and bisection is exact.
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-8) {
        double mid = 0.5 * (lo + hi);
        if (negativity_at(state0, A, F, mid) <= kNegligible)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

DepolarizationSweep depolarization_sweep(const DensityOperator& state0, const OrthonormalBasis& A,
                                         const OrthonormalBasis& F,
                                         const std::vector<double>& p_values) {
    NonclassicalityReport pure = nonclassicality_measures(compute_kd(state0, A, F));
    DepolarizationSweep sweep;
    sweep.p_values = p_values;
    for (double p : p_values) {
        if (p < 0.0 || p > 1.0) throw Error("depolarization_sweep: p values must lie in [0, 1]");
        NonclassicalityReport report = nonclassicality_measures(compute_kd(depolarize(state0, p), A, F));
        if (report.total > p * pure.total + 1e-9 ||
            report.negativity > p * pure.negativity + 1e-9 ||
            std::abs(report.imaginarity - p * pure.imaginarity) > 1e-9)
            throw InvariantViolation("depolarization_sweep: dilution relations violated");
        sweep.reports.push_back(report);
    }
    sweep.threshold = negativity_threshold(state0, A, F);
    return sweep;
}

}  // namespace kdq
