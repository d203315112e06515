#include "kdq/core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <atomic>
#include <cmath>

namespace kdq {

namespace {
std::atomic<double> g_tol_zero{1e-9};
}

double default_tol_zero() { return g_tol_zero.load(); }

void set_default_tol_zero(double tol) {
    if (!(tol > 0)) throw InvariantViolation("tol_zero must be positive");
    g_tol_zero.store(tol);
}

Ket::Ket(Vector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) throw InvariantViolation("Ket dimension must be >= 2");
    if (std::abs(amps_.norm() - 1.0) > kTolNorm)
        throw InvariantViolation("Ket is not normalized");
}

Ket Ket::basis_state(Eigen::Index d, Eigen::Index i) {
    if (i < 0 || i >= d) throw Error("basis_state index out of range");
    Vector v = Vector::Zero(d);
    v(i) = 1.0;
    return Ket(std::move(v));
}

DensityOperator::DensityOperator(Matrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 2)
        throw InvariantViolation("DensityOperator must be square with dim >= 2");
    if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kTolNorm)
        throw InvariantViolation("DensityOperator is not Hermitian");
    if (std::abs(mat_.trace().real() - 1.0) > kTolNorm || std::abs(mat_.trace().imag()) > kTolNorm)
        throw InvariantViolation("DensityOperator trace is not 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8)
        throw InvariantViolation("DensityOperator is not positive semidefinite");
}

DensityOperator DensityOperator::from_ket(const Ket& psi) {
    return DensityOperator(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityOperator DensityOperator::maximally_mixed(Eigen::Index d) {
    return DensityOperator(Matrix::Identity(d, d) / static_cast<double>(d));
}

OrthonormalBasis::OrthonormalBasis(Matrix columns) : cols_(std::move(columns)) {
    if (cols_.rows() != cols_.cols() || cols_.rows() < 2)
        throw InvariantViolation("OrthonormalBasis must have d vectors of dimension d >= 2");
    Matrix gram = cols_.adjoint() * cols_;
    if ((gram - Matrix::Identity(cols_.rows(), cols_.rows())).cwiseAbs().maxCoeff() > kTolNorm)
        throw InvariantViolation("OrthonormalBasis vectors are not orthonormal");
}

OrthonormalBasis OrthonormalBasis::computational(Eigen::Index d) {
    return OrthonormalBasis(Matrix::Identity(d, d));
}

Observable::Observable(OrthonormalBasis b, Eigen::VectorXd vals)
    : basis(std::move(b)), eigenvalues(std::move(vals)) {
    if (eigenvalues.size() != basis.dim())
        throw InvariantViolation("Observable needs one eigenvalue per basis vector");
}

EigenspacePartition::EigenspacePartition(Eigen::Index dim,
                                         std::vector<std::vector<Eigen::Index>> blocks,
                                         std::vector<double> labels)
    : dim_(dim), blocks_(std::move(blocks)), labels_(std::move(labels)) {
    if (labels_.size() != blocks_.size())
        throw InvariantViolation("partition needs one label per block");
    std::vector<bool> seen(dim_, false);
    for (const auto& block : blocks_) {
        if (block.empty()) throw InvariantViolation("partition blocks must be non-empty");
        for (Eigen::Index i : block) {
            if (i < 0 || i >= dim_) throw InvariantViolation("partition index out of range");
            if (seen[i]) throw InvariantViolation("partition blocks are not disjoint");
            seen[i] = true;
        }
    }
    for (bool s : seen)
        if (!s) throw InvariantViolation("partition blocks do not cover all indices");
    for (std::size_t a = 0; a < labels_.size(); ++a)
        for (std::size_t b = a + 1; b < labels_.size(); ++b)
            if (labels_[a] == labels_[b])
                throw InvariantViolation("partition labels must be distinct");
}

bool EigenspacePartition::all_singletons() const {
    for (const auto& block : blocks_)
        if (block.size() != 1) return false;
    return true;
}

EigenspacePartition EigenspacePartition::singletons(Eigen::Index d) {
    std::vector<std::vector<Eigen::Index>> blocks;
    std::vector<double> labels;
    for (Eigen::Index i = 0; i < d; ++i) {
        blocks.push_back({i});
        labels.push_back(static_cast<double>(i));
    }
    return EigenspacePartition(d, std::move(blocks), std::move(labels));
}

Complex inner_product(const Ket& u, const Ket& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch("inner_product: dimension mismatch");
    return u.amplitudes().dot(v.amplitudes());
}

Matrix projector(const OrthonormalBasis& basis, Eigen::Index index) {
    if (index < 0 || index >= basis.dim()) throw Error("projector: index out of range");
    Vector v = basis.columns().col(index);
    return v * v.adjoint();
}

Matrix haar_random_unitary(Eigen::Index d, Rng& rng) {
    if (d < 2) throw Error("haar_random_unitary: d must be >= 2");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix z(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so Q is Haar-distributed, not just unitary.
    for (Eigen::Index j = 0; j < d; ++j) {
        Complex rjj = r(j, j);
        q.col(j) *= (std::abs(rjj) > 0) ? rjj / std::abs(rjj) : Complex(1.0, 0.0);
    }
    return q;
}

Ket haar_random_ket(Eigen::Index d, Rng& rng) {
    if (d < 2) throw Error("haar_random_ket: d must be >= 2");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    v /= v.norm();
    return Ket(std::move(v));
}

OrthonormalBasis haar_random_basis(Eigen::Index d, Rng& rng) {
    return OrthonormalBasis(haar_random_unitary(d, rng));
}

Matrix observable_matrix(const Observable& obs) {
    const Eigen::Index d = obs.basis.dim();
    Matrix m = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        m += obs.eigenvalues(i) * projector(obs.basis, i);
    return m;
}

}  // namespace kdq
