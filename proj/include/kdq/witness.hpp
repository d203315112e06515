#ifndef KDQ_WITNESS_HPP
#define KDQ_WITNESS_HPP

#include "kdq/core.hpp"

namespace kdq {

enum class WitnessKind { ImagPair, RealPair, CoarseImag, CoarseReal };

/// Hermitian witness with its two nonzero analytic eigenpairs.  Half the
/// witness expectation gives the imaginary (H, R) or real (G, S) part of the
/// corresponding quasiprobability.
struct WitnessEigenpairs {
    Matrix op;
    double lambda_plus;
    double lambda_minus;
    Ket v_plus;
    Ket v_minus;
    WitnessKind kind;
};

/// Ĥ = iΠ̂_aΠ̂_f − iΠ̂_fΠ̂_a with eigenvalues ±|⟨a|f⟩|√(1−|⟨a|f⟩|²).
/// Overlaps within 1e-6 of 0 or 1 are refused as ill-conditioned.
WitnessEigenpairs imag_witness(const Ket& a, const Ket& f);

/// Ĝ = Π̂_aΠ̂_f + Π̂_fΠ̂_a with eigenvalues |⟨a|f⟩|(|⟨a|f⟩| ± 1).
WitnessEigenpairs real_witness(const Ket& a, const Ket& f);

/// R̂ = iΠ̂_aF̂ − iF̂Π̂_a for a rank-1 A-projector against an F eigenspace
/// projector; eigenvalues ±√(p − p²) with p = Tr(Π̂_aF̂).
WitnessEigenpairs coarse_imag_witness(const Ket& a, const Matrix& f_block);

/// Ŝ = Π̂_aF̂ + F̂Π̂_a with eigenvalues p ± √p.
WitnessEigenpairs coarse_real_witness(const Ket& a, const Matrix& f_block);

/// Real superposition of the two eigenvectors achieving
/// ½⟨Ψ|M|Ψ⟩ = target for target in [λ⁻/2, λ⁺/2].
Ket tailor_state(const WitnessEigenpairs& witness, double target);

}  // namespace kdq

#endif
