// operator_algebra.hpp — Dense complex operators, Hilbert-space composition,
// Hermitian eigendecomposition and column-stacked superoperators.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace corrbath {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;

/// Dense complex square matrix with an optional validated hermiticity flag.
/// Entries are dimensionless; energies are expressed in units with hbar = 1.
class Operator {
  public:
    Operator() = default;
    explicit Operator(Matrix entries, bool hermitian = false);

    Eigen::Index dim() const { return mat_.rows(); }
    const Matrix& mat() const { return mat_; }
    bool is_hermitian() const { return hermitian_; }

    Operator adjoint() const { return Operator(mat_.adjoint(), hermitian_); }

    static Operator identity(Eigen::Index dim);

  private:
    Matrix mat_;
    bool hermitian_ = false;
};

// Pauli matrices and ladder operators on a single qubit.
Operator sigma_x();
Operator sigma_y();
Operator sigma_z();
Operator sigma_plus();   // |0><1| in the (|0>, |1>) ordering used throughout
Operator sigma_minus();

/// Hermitian, unit-trace, positive-semidefinite state. Construction validates
/// all three invariants (tolerances 1e-12 / 1e-10 / -1e-10).
class DensityMatrix {
  public:
    explicit DensityMatrix(Matrix rho);

    Eigen::Index dim() const { return op_.dim(); }
    const Matrix& mat() const { return op_.mat(); }
    const Operator& op() const { return op_; }

    static DensityMatrix pure(const Vector& psi);
    static DensityMatrix maximally_mixed(Eigen::Index dim);

  private:
    Operator op_;
};

/// Linear map on column-stacked density matrices, stored dense (dim^2 x dim^2).
/// vec(A X B) = (B^T kron A) vec(X) with column-major stacking.
struct Superoperator {
    Eigen::Index dim = 0;   // Hilbert-space dimension
    Matrix mat;             // dim^2 x dim^2

    static Superoperator zero(Eigen::Index dim);
    static Superoperator left_mul(const Matrix& a);          // X -> A X
    static Superoperator right_mul(const Matrix& b);         // X -> X B
    static Superoperator sandwich(const Matrix& a, const Matrix& b); // X -> A X B

    Matrix apply(const Matrix& x) const;

    Superoperator& operator+=(const Superoperator& other);
    Superoperator operator*(double s) const;
};

Matrix kron(const Matrix& a, const Matrix& b);
Vector vectorize(const Matrix& x);
Matrix unvectorize(const Vector& v, Eigen::Index dim);

/// Commutator superoperator i[rho, H] (the coherent part of the generator).
Superoperator coherent_superop(const Matrix& h);

// Kronecker composition, factor `a` on the left (site 0 leftmost).
Operator tensor(const Operator& a, const Operator& b);

// Places `op` on `site` of an n-site register of equal local dimension,
// identity elsewhere.
Operator embed_site(const Operator& op, int site, int n_sites);

struct EighResult {
    RealVector eigenvalues;   // ascending
    Matrix v;                 // unitary, columns are eigenvectors
};

/// Hermitian eigendecomposition with deterministic ordering: eigenvalues
/// ascending, each eigenvector phase-fixed (largest entry real positive) and
/// degenerate blocks sorted lexicographically on the entries.
EighResult eigh(const Operator& h);

double hermiticity_defect(const Matrix& a);
bool is_hermitian_within(const Matrix& a, double tol);

}  // namespace corrbath
