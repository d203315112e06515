#include "kdq/witness.hpp"

#include <algorithm>
#include <cmath>

namespace kdq {

namespace {

// Overlaps this close to 0 or 1 make the analytic eigenvectors
// ill-conditioned; callers needing those regimes should diagonalize densely.
constexpr double kDegenerateMargin = 1e-6;

Ket normalized_eigenvector(const Matrix& op, Vector raw, double lambda) {
    double norm = raw.norm();
    if (norm <= 1e-12) throw Error("witness eigenvector degenerated to zero");
    raw /= norm;
    if ((op * raw - lambda * raw).norm() > 1e-8)
        throw Error("witness eigenvector residual exceeds tolerance");
    // Deterministic phase: first amplitude of noticeable size real positive.
    for (Eigen::Index i = 0; i < raw.size(); ++i) {
        if (std::abs(raw(i)) > 1e-9) {
            raw *= std::conj(raw(i)) / std::abs(raw(i));
            break;
        }
    }
    return Ket(std::move(raw));
}

}  // namespace

WitnessEigenpairs imag_witness(const Ket& a, const Ket& f) {
    if (a.dim() != f.dim()) throw DimensionMismatch("imag_witness: dimension mismatch");
    Complex overlap = inner_product(a, f);
    double c = std::abs(overlap);
    if (c <= kDegenerateMargin || c >= 1.0 - kDegenerateMargin)
        throw Error("imag_witness: overlap magnitude too close to 0 or 1, eigenstructure degenerate");

    Matrix pa = a.amplitudes() * a.amplitudes().adjoint();
    Matrix pf = f.amplitudes() * f.amplitudes().adjoint();
    Matrix h = Complex(0, 1) * (pa * pf - pf * pa);

    double root = std::sqrt(1.0 - c * c);
    double lambda = c * root;
    Complex phase = overlap / c;

    auto eigvec = [&](double sign) {
        Vector v = (Complex(-sign, 0) + Complex(0, -c / root)) * phase * a.amplitudes() +
                   Complex(0, 1.0 / root) * f.amplitudes();
        return normalized_eigenvector(h, std::move(v), sign * lambda);
    };
    Ket vp = eigvec(+1.0), vm = eigvec(-1.0);
    return WitnessEigenpairs{std::move(h),  lambda,        -lambda,
                             std::move(vp), std::move(vm), WitnessKind::ImagPair};
}

WitnessEigenpairs real_witness(const Ket& a, const Ket& f) {
    if (a.dim() != f.dim()) throw DimensionMismatch("real_witness: dimension mismatch");
    Complex overlap = inner_product(a, f);
    double c = std::abs(overlap);
    if (c <= kDegenerateMargin || c >= 1.0 - kDegenerateMargin)
        throw Error("real_witness: overlap magnitude too close to 0 or 1, eigenstructure degenerate");

    Matrix pa = a.amplitudes() * a.amplitudes().adjoint();
    Matrix pf = f.amplitudes() * f.amplitudes().adjoint();
    Matrix g = pa * pf + pf * pa;

    double lp = c * (c + 1.0);
    double lm = c * (c - 1.0);
    Complex phase = overlap / c;

    auto eigvec = [&](double sign, double lambda) {
        Vector v = f.amplitudes() + Complex(sign, 0) * phase * a.amplitudes();
        return normalized_eigenvector(g, std::move(v), lambda);
    };
    Ket vp = eigvec(+1.0, lp), vm = eigvec(-1.0, lm);
    return WitnessEigenpairs{std::move(g),  lp,            lm,
                             std::move(vp), std::move(vm), WitnessKind::RealPair};
}

WitnessEigenpairs coarse_imag_witness(const Ket& a, const Matrix& f_block) {
    if (f_block.rows() != a.dim() || f_block.cols() != a.dim())
        throw DimensionMismatch("coarse_imag_witness: dimension mismatch");
    Matrix pa = a.amplitudes() * a.amplitudes().adjoint();
    double p = (pa * f_block).trace().real();
    if (p <= kDegenerateMargin || p >= 1.0 - kDegenerateMargin)
        throw Error("coarse_imag_witness: Tr(Π̂_aF̂) too close to 0 or 1");

    Matrix r = Complex(0, 1) * (pa * f_block - f_block * pa);
    double lambda = std::sqrt(p - p * p);
    Vector fa = f_block * a.amplitudes();

    auto eigvec = [&](double sign) {
        Vector v = (Complex(-sign / std::sqrt(p), 0) + Complex(0, 1.0 / std::sqrt(1.0 - p))) * fa -
                   Complex(0, 1.0 / std::sqrt(1.0 - p)) * a.amplitudes();
        return normalized_eigenvector(r, std::move(v), sign * lambda);
    };
    Ket vp = eigvec(+1.0), vm = eigvec(-1.0);
    return WitnessEigenpairs{std::move(r),  lambda,        -lambda,
                             std::move(vp), std::move(vm), WitnessKind::CoarseImag};
}

WitnessEigenpairs coarse_real_witness(const Ket& a, const Matrix& f_block) {
    if (f_block.rows() != a.dim() || f_block.cols() != a.dim())
        throw DimensionMismatch("coarse_real_witness: dimension mismatch");
    Matrix pa = a.amplitudes() * a.amplitudes().adjoint();
    double p = (pa * f_block).trace().real();
    if (p <= kDegenerateMargin || p >= 1.0 - kDegenerateMargin)
        throw Error("coarse_real_witness: Tr(Π̂_aF̂) too close to 0 or 1");

    Matrix s = pa * f_block + f_block * pa;
    double lp = p + std::sqrt(p);
    double lm = p - std::sqrt(p);
    Vector fa = f_block * a.amplitudes();

    auto eigvec = [&](double sign, double lambda) {
        Vector v = a.amplitudes() + Complex(sign / std::sqrt(p), 0) * fa;
        return normalized_eigenvector(s, std::move(v), lambda);
    };
    Ket vp = eigvec(+1.0, lp), vm = eigvec(-1.0, lm);
    return WitnessEigenpairs{std::move(s),  lp,            lm,
                             std::move(vp), std::move(vm), WitnessKind::CoarseReal};
}

Ket tailor_state(const WitnessEigenpairs& witness, double target) {
    const double lo = witness.lambda_minus / 2.0;
    const double hi = witness.lambda_plus / 2.0;
    if (target < lo - 1e-12 || target > hi + 1e-12)
        throw Error("tailor_state: target outside achievable interval");
    double cos2 = (2.0 * target - witness.lambda_minus) /
                  (witness.lambda_plus - witness.lambda_minus);
    cos2 = std::clamp(cos2, 0.0, 1.0);
    double ct = std::sqrt(cos2);
    double st = std::sqrt(1.0 - cos2);
    Vector v = ct * witness.v_plus.amplitudes() + st * witness.v_minus.amplitudes();
    v /= v.norm();
    return Ket(std::move(v));
}

}  // namespace kdq
