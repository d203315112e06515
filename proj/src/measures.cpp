#include "kdq/measures.hpp"

#include <cmath>

namespace kdq {

double thm2_bound(Eigen::Index d, Eigen::Index k) {
    if (d < 2 || k < 2) throw Error("thm2_bound requires d >= 2 and k >= 2");
    return std::pow(static_cast<double>(d), 0.5 * static_cast<double>(k - 1)) - 1.0;
}

NonclassicalityReport nonclassicality_measures(const KDDistribution& dist) {
    NonclassicalityReport report;
    double abs_sum = 0.0, abs_re_sum = 0.0, abs_im_sum = 0.0;
    for (const Complex& q : dist.values()) {
        abs_sum += std::abs(q);
        abs_re_sum += std::abs(q.real());
        abs_im_sum += std::abs(q.imag());
    }
    report.total = abs_sum - 1.0;
    report.negativity = abs_re_sum - 1.0;
    report.imaginarity = abs_im_sum;
    const Eigen::Index d = dist.shape().front();
    report.bound = thm2_bound(d, std::max<Eigen::Index>(dist.k(), 2));
    // Looser than computation tolerance: saturation composes k-1 unbiasedness
    // checks.
    report.saturates_bound =
        !dist.conditioned() && std::abs(report.total - report.bound) <= 1e-8;
    return report;
}

MaxConditions check_max_conditions(const DensityOperator& state,
                                   const std::vector<OrthonormalBasis>& bases) {
    if (bases.size() < 2) throw Error("check_max_conditions requires k >= 2 bases");
    const Eigen::Index d = state.dim();
    for (const auto& b : bases)
        if (b.dim() != d) throw DimensionMismatch("check_max_conditions: dimension mismatch");

    MaxConditions cond;
    const double target = 1.0 / std::sqrt(static_cast<double>(d));

    cond.adjacent_mub = true;
    for (std::size_t m = 0; m + 1 < bases.size() && cond.adjacent_mub; ++m) {
        Matrix cross = bases[m].columns().adjoint() * bases[m + 1].columns();
        for (Eigen::Index i = 0; i < d && cond.adjacent_mub; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
                if (std::abs(std::abs(cross(i, j)) - target) > 1e-9) {
                    cond.adjacent_mub = false;
                    break;
                }
    }

    cond.state_unbiased = std::abs(state.purity() - 1.0) <= 1e-9;
    for (const auto* basis : {&bases.front(), &bases.back()}) {
        if (!cond.state_unbiased) break;
        for (Eigen::Index i = 0; i < d; ++i) {
            Vector v = basis->columns().col(i);
            double overlap = std::sqrt(std::max(0.0, (v.dot(state.matrix() * v)).real()));
            if (std::abs(overlap - target) > 1e-9) {
                cond.state_unbiased = false;
                break;
            }
        }
    }
    return cond;
}

}  // namespace kdq
