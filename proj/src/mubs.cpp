#include "kdq/mubs.hpp"

#include <cmath>
#include <numbers>

namespace kdq {

namespace {

bool unbiased_within(const Matrix& cross, double target, double tol) {
    for (Eigen::Index i = 0; i < cross.rows(); ++i)
        for (Eigen::Index j = 0; j < cross.cols(); ++j)
            if (std::abs(std::abs(cross(i, j)) - target) > tol) return false;
    return true;
}

Matrix hadamard_tensor_hadamard() {
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    Matrix hh(4, 4);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) hh.block(2 * i, 2 * j, 2, 2) = h(i, j) * h;
    return hh;
}

// Exhaustive search for the third real d = 4 MUB: sign matrices S/2 with
// orthogonal columns and all overlaps with the H⊗H columns of magnitude 1/2.
// Columns are encoded as 4-bit patterns (bit r set => entry -1/2), scanned in
// increasing order, so the first hit is the lexicographically smallest.
Matrix search_third_real_mub_d4() {
    Matrix hh = hadamard_tensor_hadamard();
    std::vector<Eigen::Vector4d> candidates;
    for (int code = 0; code < 16; ++code) {
        Eigen::Vector4d col;
        for (int r = 0; r < 4; ++r) col(r) = (code & (1 << r)) ? -0.5 : 0.5;
        bool ok = true;
        for (Eigen::Index j = 0; j < 4 && ok; ++j)
            ok = std::abs(std::abs(hh.col(j).real().dot(col)) - 0.5) <= 1e-12;
        candidates.push_back(ok ? col : Eigen::Vector4d::Zero());
    }
    for (int c0 = 0; c0 < 16; ++c0) {
        if (candidates[c0].isZero()) continue;
        for (int c1 = 0; c1 < 16; ++c1) {
            if (candidates[c1].isZero() ||
                std::abs(candidates[c0].dot(candidates[c1])) > 1e-12)
                continue;
            for (int c2 = 0; c2 < 16; ++c2) {
                if (candidates[c2].isZero() ||
                    std::abs(candidates[c0].dot(candidates[c2])) > 1e-12 ||
                    std::abs(candidates[c1].dot(candidates[c2])) > 1e-12)
                    continue;
                for (int c3 = 0; c3 < 16; ++c3) {
                    if (candidates[c3].isZero() ||
                        std::abs(candidates[c0].dot(candidates[c3])) > 1e-12 ||
                        std::abs(candidates[c1].dot(candidates[c3])) > 1e-12 ||
                        std::abs(candidates[c2].dot(candidates[c3])) > 1e-12)
                        continue;
                    Eigen::Matrix4d s;
                    s.col(0) = candidates[c0];
                    s.col(1) = candidates[c1];
                    s.col(2) = candidates[c2];
                    s.col(3) = candidates[c3];
                    return s.cast<Complex>();
                }
            }
        }
    }
    throw Error("no third real MUB found at d = 4");  // unreachable
}

}  // namespace

MubFamily::MubFamily(Eigen::Index d, std::vector<OrthonormalBasis> b, bool real)
    : dim(d), bases(std::move(b)), real_flag(real) {
    if (bases.size() < 2) throw InvariantViolation("MubFamily needs at least two bases");
    const double target = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (bases[i].dim() != dim) throw DimensionMismatch("MubFamily basis dimension mismatch");
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
            Matrix cross = bases[i].columns().adjoint() * bases[j].columns();
            if (!unbiased_within(cross, target, 1e-9))
                throw InvariantViolation("MubFamily bases are not pairwise unbiased");
        }
    }
    if (real_flag)
        for (const auto& basis : bases)
            if (basis.columns().imag().cwiseAbs().maxCoeff() > 1e-10)
                throw InvariantViolation("MubFamily real_flag set but amplitudes are complex");
}

OrthonormalBasis fourier_basis(Eigen::Index d) {
    if (d < 2) throw Error("fourier_basis: d must be >= 2");
    Matrix cols(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i) {
            double phase = 2.0 * std::numbers::pi * static_cast<double>(i * j) / d;
            cols(i, j) = norm * Complex(std::cos(phase), std::sin(phase));
        }
    return OrthonormalBasis(std::move(cols));
}

MubFamily pauli_mub_triplet() {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix z = Matrix::Identity(2, 2);
    Matrix x(2, 2);
    x << s, s, s, -s;
    Matrix y(2, 2);
    y << Complex(s, 0), Complex(s, 0), Complex(0, s), Complex(0, -s);
    return MubFamily(2, {OrthonormalBasis(z), OrthonormalBasis(x), OrthonormalBasis(y)}, false);
}

MubFamily real_mub_triplet_d4() {
    static const Matrix third = search_third_real_mub_d4();  // single-shot, cached
    return MubFamily(4,
                     {OrthonormalBasis::computational(4),
                      OrthonormalBasis(hadamard_tensor_hadamard()), OrthonormalBasis(third)},
                     true);
}

bool is_mutually_unbiased(const OrthonormalBasis& b1, const OrthonormalBasis& b2) {
    if (b1.dim() != b2.dim()) throw DimensionMismatch("is_mutually_unbiased: dimension mismatch");
    Matrix cross = b1.columns().adjoint() * b2.columns();
    return unbiased_within(cross, 1.0 / std::sqrt(static_cast<double>(b1.dim())), 1e-9);
}

MubFamily mub_triplet_for(Eigen::Index d) {
    switch (d) {
        case 2:
            return pauli_mub_triplet();
        case 3: {
            // Quadratic-phase companion of the Fourier basis: amplitudes
            // ω^(i² + ij)/√3.
            Matrix cols(3, 3);
            const double norm = 1.0 / std::sqrt(3.0);
            for (Eigen::Index j = 0; j < 3; ++j)
                for (Eigen::Index i = 0; i < 3; ++i) {
                    double phase = 2.0 * std::numbers::pi * static_cast<double>(i * i + i * j) / 3.0;
                    cols(i, j) = norm * Complex(std::cos(phase), std::sin(phase));
                }
            return MubFamily(
                3, {OrthonormalBasis::computational(3), fourier_basis(3), OrthonormalBasis(cols)},
                false);
        }
        case 4:
            return real_mub_triplet_d4();
        default:
            throw Error("mub_triplet_for: only d in {2, 3, 4} is supported");
    }
}

std::pair<Ket, std::vector<OrthonormalBasis>> max_nonclassical_instance(const MubFamily& triplet,
                                                                        Eigen::Index k) {
    if (triplet.bases.size() < 3)
        throw Error("max_nonclassical_instance requires a triplet of MUBs");
    if (k < 2) throw Error("max_nonclassical_instance requires k >= 2");
    Ket psi = triplet.bases[0].vector(0);
    std::vector<OrthonormalBasis> bases;
    for (Eigen::Index m = 1; m <= k; ++m)
        bases.push_back(m % 2 == 1 ? triplet.bases[2] : triplet.bases[1]);
    return {std::move(psi), std::move(bases)};
}

}  // namespace kdq
