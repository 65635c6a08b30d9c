// operator_algebra.cpp — Implementation of the dense operator layer.

#include "corrbath/operator_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace corrbath {

double hermiticity_defect(const Matrix& a) {
    return (a - a.adjoint().eval()).cwiseAbs().maxCoeff();
}

bool is_hermitian_within(const Matrix& a, double tol) {
    return hermiticity_defect(a) < tol;
}

Operator::Operator(Matrix entries, bool hermitian)
    : mat_(std::move(entries)), hermitian_(hermitian) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1) {
        throw std::invalid_argument("Operator must be square with dim >= 1");
    }
    if (hermitian_ && !is_hermitian_within(mat_, kHermitianTol)) {
        throw std::invalid_argument("Operator flagged Hermitian violates |A - A^dag| < 1e-12");
    }
}

Operator Operator::identity(Eigen::Index dim) {
    return Operator(Matrix::Identity(dim, dim), true);
}

Operator sigma_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return Operator(m, true);
}

Operator sigma_y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return Operator(m, true);
}

Operator sigma_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return Operator(m, true);
}

Operator sigma_plus() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1;
    return Operator(m, false);
}

Operator sigma_minus() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1;
    return Operator(m, false);
}

DensityMatrix::DensityMatrix(Matrix rho) : op_() {
    if (!is_hermitian_within(rho, 1e-12)) {
        throw std::invalid_argument("DensityMatrix must be Hermitian within 1e-12");
    }
    const double tr_err = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (tr_err > 1e-10) {
        throw std::invalid_argument("DensityMatrix trace differs from 1 by " + std::to_string(tr_err));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("DensityMatrix has eigenvalue below -1e-10");
    }
    op_ = Operator(std::move(rho), true);
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
    const double n2 = psi.squaredNorm();
    if (n2 <= 0.0) throw std::invalid_argument("pure state requires a nonzero vector");
    Matrix rho = (psi * psi.adjoint()) / n2;
    return DensityMatrix(std::move(rho));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector vectorize(const Matrix& x) {
    return Eigen::Map<const Vector>(x.data(), x.size());
}

Matrix unvectorize(const Vector& v, Eigen::Index dim) {
    if (v.size() != dim * dim) throw std::invalid_argument("unvectorize: size mismatch");
    return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

Superoperator Superoperator::zero(Eigen::Index dim) {
    return Superoperator{dim, Matrix::Zero(dim * dim, dim * dim)};
}

Superoperator Superoperator::left_mul(const Matrix& a) {
    const Eigen::Index d = a.rows();
    return Superoperator{d, kron(Matrix::Identity(d, d), a)};
}

Superoperator Superoperator::right_mul(const Matrix& b) {
    const Eigen::Index d = b.rows();
    return Superoperator{d, kron(b.transpose(), Matrix::Identity(d, d))};
}

Superoperator Superoperator::sandwich(const Matrix& a, const Matrix& b) {
    return Superoperator{a.rows(), kron(b.transpose(), a)};
}

Matrix Superoperator::apply(const Matrix& x) const {
    if (x.rows() != dim || x.cols() != dim) {
        throw std::invalid_argument("Superoperator::apply: dimension mismatch");
    }
    Vector v = mat * vectorize(x);
    return unvectorize(v, dim);
}

Superoperator& Superoperator::operator+=(const Superoperator& other) {
    if (dim != other.dim) throw std::invalid_argument("Superoperator sum: dimension mismatch");
    mat += other.mat;
    return *this;
}

Superoperator Superoperator::operator*(double s) const {
    return Superoperator{dim, mat * s};
}

Superoperator coherent_superop(const Matrix& h) {
    const Eigen::Index d = h.rows();
    const Complex i_unit(0.0, 1.0);
    Superoperator out = Superoperator::zero(d);
    // i [rho, H] = i (rho H - H rho)
    out.mat = i_unit * (kron(h.transpose(), Matrix::Identity(d, d)) -
                        kron(Matrix::Identity(d, d), h));
    return out;
}

Operator tensor(const Operator& a, const Operator& b) {
    return Operator(kron(a.mat(), b.mat()), a.is_hermitian() && b.is_hermitian());
}

Operator embed_site(const Operator& op, int site, int n_sites) {
    if (site < 0 || site >= n_sites) {
        throw std::invalid_argument("embed_site: site index out of range");
    }
    const Eigen::Index local = op.dim();
    Matrix acc = Matrix::Identity(1, 1);
    for (int s = 0; s < n_sites; ++s) {
        if (s == site) {
            acc = kron(acc, op.mat());
        } else {
            acc = kron(acc, Matrix::Identity(local, local));
        }
    }
    return Operator(std::move(acc), op.is_hermitian());
}

namespace {

// Rotate each column so its largest-magnitude entry is real positive.
void fix_phases(Matrix& v) {
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
        Eigen::Index imax = 0;
        double amax = 0.0;
        for (Eigen::Index r = 0; r < v.rows(); ++r) {
            const double a = std::abs(v(r, c));
            if (a > amax) {
                amax = a;
                imax = r;
            }
        }
        if (amax > 0.0) {
            const Complex phase = v(imax, c) / amax;
            v.col(c) *= std::conj(phase);
        }
    }
}

bool column_lex_less(const Matrix& v, Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
        const Complex& x = v(r, a);
        const Complex& y = v(r, b);
        if (std::abs(x.real() - y.real()) > 1e-13) return x.real() < y.real();
        if (std::abs(x.imag() - y.imag()) > 1e-13) return x.imag() < y.imag();
    }
    return false;
}

}  // namespace

EighResult eigh(const Operator& h) {
    if (!is_hermitian_within(h.mat(), kHermitianTol)) {
        throw std::invalid_argument("eigh: input not Hermitian within 1e-12");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.mat());
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("eigh: eigensolver failed to converge");
    }
    EighResult out{es.eigenvalues(), es.eigenvectors()};
    fix_phases(out.v);

    // Deterministic ordering inside degenerate blocks.
    const double scale = std::max(1.0, out.eigenvalues.cwiseAbs().maxCoeff());
    const double degen_tol = 1e-12 * scale;
    Eigen::Index start = 0;
    while (start < out.eigenvalues.size()) {
        Eigen::Index stop = start + 1;
        while (stop < out.eigenvalues.size() &&
               out.eigenvalues(stop) - out.eigenvalues(start) <= degen_tol) {
            ++stop;
        }
        if (stop - start > 1) {
            std::vector<Eigen::Index> order(stop - start);
            std::iota(order.begin(), order.end(), start);
            std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
                return column_lex_less(out.v, a, b);
            });
            Matrix block(out.v.rows(), stop - start);
            for (Eigen::Index k = 0; k < stop - start; ++k) block.col(k) = out.v.col(order[k]);
            out.v.middleCols(start, stop - start) = block;
        }
        start = stop;
    }
    return out;
}

}  // namespace corrbath
