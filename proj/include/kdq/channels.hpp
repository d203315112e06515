#ifndef KDQ_CHANNELS_HPP
#define KDQ_CHANNELS_HPP

#include <optional>

#include "kdq/measures.hpp"

namespace kdq {

/// ρ ↦ pρ + (1−p)𝟙/d.
DensityOperator depolarize(const DensityOperator& state, double p);

DensityOperator convex_mix(const std::vector<DensityOperator>& states,
                           const std::vector<double>& weights);

/// Largest p in [0, 1] at which the depolarized state's KD distribution has
/// no negative real parts (negativity <= 1e-10), found by bisection to 1e-8
/// in p.  Null when the p = 1 distribution is already negativity-free.
std::optional<double> negativity_threshold(const DensityOperator& state0,
                                           const OrthonormalBasis& A, const OrthonormalBasis& F);

struct DepolarizationSweep {
    std::vector<double> p_values;
    std::vector<NonclassicalityReport> reports;
    std::optional<double> threshold;
};

/// Per-p nonclassicality reports; enforces the linear dilution relations
/// 𝒩(p) ≤ p𝒩(1), 𝒩^ℜ⁻(p) ≤ p𝒩^ℜ⁻(1) and 𝒩^ℑ(p) = p𝒩^ℑ(1).
DepolarizationSweep depolarization_sweep(const DensityOperator& state0, const OrthonormalBasis& A,
                                         const OrthonormalBasis& F,
                                         const std::vector<double>& p_values);

}  // namespace kdq

#endif
