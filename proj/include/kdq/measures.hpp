#ifndef KDQ_MEASURES_HPP
#define KDQ_MEASURES_HPP

#include "kdq/kd.hpp"

namespace kdq {

struct NonclassicalityReport {
    double total = 0.0;        // -1 + Σ|q|
    double negativity = 0.0;   // -1 + Σ|Re q|
    double imaginarity = 0.0;  // Σ|Im q|
    double bound = 0.0;        // d^((k-1)/2) - 1
    bool saturates_bound = false;
};

/// d^((k-1)/2) - 1, the maximum total nonclassicality of an unconditioned
/// k-basis distribution.
double thm2_bound(Eigen::Index d, Eigen::Index k);

/// The bound comparison is suppressed for conditioned distributions, whose
/// measures may exceed it.
NonclassicalityReport nonclassicality_measures(const KDDistribution& dist);

struct MaxConditions {
    bool adjacent_mub = false;    // each adjacent basis pair mutually unbiased
    bool state_unbiased = false;  // pure state with all end-basis overlaps 1/√d
    bool satisfied() const { return adjacent_mub && state_unbiased; }
};

/// Checks the two saturation conditions of the maximum-nonclassicality bound.
MaxConditions check_max_conditions(const DensityOperator& state,
                                   const std::vector<OrthonormalBasis>& bases);

}  // namespace kdq

#endif
