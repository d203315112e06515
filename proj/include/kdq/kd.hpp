#ifndef KDQ_KD_HPP
#define KDQ_KD_HPP

#include <optional>
#include <utility>
#include <vector>

#include "kdq/core.hpp"

namespace kdq {

/// Complex quasiprobability tensor over k basis-index axes, stored row-major
/// with axis 0 varying slowest.  Axis 0 belongs to the basis whose projector
/// acts first on the state; for k = 2 that is the "A" axis and axis 1 is "F".
class KDDistribution {
public:
    KDDistribution(std::vector<Eigen::Index> shape, std::vector<Complex> values,
                   std::vector<OrthonormalBasis> bases, std::optional<DensityOperator> state,
                   bool conditioned = false,
                   std::optional<double> postselection_probability = std::nullopt,
                   bool coarse = false);

    Eigen::Index k() const { return static_cast<Eigen::Index>(shape_.size()); }
    const std::vector<Eigen::Index>& shape() const { return shape_; }
    const std::vector<Complex>& values() const { return values_; }
    const std::vector<OrthonormalBasis>& bases() const { return bases_; }
    const std::optional<DensityOperator>& state() const { return state_; }
    bool conditioned() const { return conditioned_; }
    std::optional<double> postselection_probability() const { return postselection_probability_; }
    bool coarse() const { return coarse_; }

    Complex at(const std::vector<Eigen::Index>& index) const;
    /// k = 2 view with rows indexing axis 0.
    Matrix as_matrix() const;

    Eigen::Index flat_index(const std::vector<Eigen::Index>& index) const;

private:
    std::vector<Eigen::Index> shape_;
    std::vector<Complex> values_;
    std::vector<OrthonormalBasis> bases_;
    std::optional<DensityOperator> state_;
    bool conditioned_ = false;
    std::optional<double> postselection_probability_;
    bool coarse_ = false;
};

/// Measurement outcome on the last basis axis: the subset of retained indices.
struct PostselectionOutcome {
    std::vector<Eigen::Index> indices;
};

KDDistribution compute_kd(const DensityOperator& state, const OrthonormalBasis& A,
                          const OrthonormalBasis& F);

KDDistribution compute_extended_kd(const DensityOperator& state,
                                   const std::vector<OrthonormalBasis>& bases);

/// Sum over all axes except (alpha, beta); requires alpha < beta.
KDDistribution marginalize(const KDDistribution& dist, Eigen::Index alpha, Eigen::Index beta);

/// Born probabilities along the first or last axis.  Interior axes are
/// refused: their marginals are not probabilities.
Eigen::VectorXd marginal_probabilities(const KDDistribution& dist, Eigen::Index axis);

struct Reconstruction {
    DensityOperator state;
    // (i, j) cells whose overlap ⟨a_j^(k)|a_i^(1)⟩ vanished, handled by the
    // direct matrix-element convention.
    std::vector<std::pair<Eigen::Index, Eigen::Index>> convention_cells;
};

/// Operator expansion of the state from the (first, last) marginal.
Reconstruction reconstruct_state(const KDDistribution& dist,
                                 double tol_zero = default_tol_zero());

/// Bayes-style conditioning on the last axis.  The postselection probability
/// is computed both as the quasiprobability sum and, when the distribution
/// carries its state and bases, as Tr(F̂ρ̂); disagreement raises an error.
KDDistribution condition_on(const KDDistribution& dist, const PostselectionOutcome& outcome,
                            double tol_zero = default_tol_zero());

/// Coarse-grained distribution Tr(F̂_k Â_l ρ̂) over eigenspace blocks.
KDDistribution coarse_grain(const DensityOperator& state, const EigenspacePartition& partA,
                            const EigenspacePartition& partF, const OrthonormalBasis& basisA,
                            const OrthonormalBasis& basisF);

/// One-sided coarse-graining: singleton A axis of length d, blocks on F.
KDDistribution one_sided_coarse_grain(const DensityOperator& state, const OrthonormalBasis& A,
                                      const EigenspacePartition& partF,
                                      const OrthonormalBasis& basisF);

}  // namespace kdq

#endif
