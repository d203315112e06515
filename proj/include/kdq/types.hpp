#ifndef KDQ_TYPES_HPP
#define KDQ_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

// Construction tolerance for norms, hermiticity and orthonormality.
inline constexpr double kTolNorm = 1e-10;

// Default threshold below which a magnitude counts as zero.  Overridable
// per call on the operations that take a tolerance argument.
double default_tol_zero();
void set_default_tol_zero(double tol);

/// Unit vector in a d-dimensional complex Hilbert space.
class Ket {
public:
    explicit Ket(Vector amplitudes);

    Eigen::Index dim() const { return amps_.size(); }
    const Vector& amplitudes() const { return amps_; }
    Complex operator[](Eigen::Index i) const { return amps_(i); }

    static Ket basis_state(Eigen::Index d, Eigen::Index i);

private:
    Vector amps_;
};

/// Hermitian, unit-trace, positive-semidefinite operator.
class DensityOperator {
public:
    explicit DensityOperator(Matrix m);

    Eigen::Index dim() const { return mat_.rows(); }
    const Matrix& matrix() const { return mat_; }

    static DensityOperator from_ket(const Ket& psi);
    static DensityOperator maximally_mixed(Eigen::Index d);

    double purity() const { return (mat_ * mat_).trace().real(); }

private:
    Matrix mat_;
};

/// Ordered orthonormal basis, stored as the columns of a unitary matrix.
class OrthonormalBasis {
public:
    explicit OrthonormalBasis(Matrix columns);

    Eigen::Index dim() const { return cols_.rows(); }
    const Matrix& columns() const { return cols_; }
    Ket vector(Eigen::Index i) const { return Ket(cols_.col(i)); }

    static OrthonormalBasis computational(Eigen::Index d);

private:
    Matrix cols_;
};

/// Observable given by an eigenbasis and (possibly degenerate) eigenvalues.
struct Observable {
    OrthonormalBasis basis;
    Eigen::VectorXd eigenvalues;

    Observable(OrthonormalBasis b, Eigen::VectorXd vals);
};

/// Partition of basis indices into eigenspace blocks with distinct labels.
class EigenspacePartition {
public:
    EigenspacePartition(Eigen::Index dim, std::vector<std::vector<Eigen::Index>> blocks,
                        std::vector<double> labels);

    Eigen::Index dim() const { return dim_; }
    Eigen::Index block_count() const { return static_cast<Eigen::Index>(blocks_.size()); }
    const std::vector<std::vector<Eigen::Index>>& blocks() const { return blocks_; }
    const std::vector<double>& labels() const { return labels_; }
    bool all_singletons() const;

    static EigenspacePartition singletons(Eigen::Index d);

private:
    Eigen::Index dim_;
    std::vector<std::vector<Eigen::Index>> blocks_;
    std::vector<double> labels_;
};

}  // namespace kdq

#endif
