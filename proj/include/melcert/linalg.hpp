#ifndef MELCERT_LINALG_HPP
#define MELCERT_LINALG_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace melcert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Default absolute tolerance for Hermiticity checks.
inline constexpr double kHermitianTol = 1e-10;

/// Full spectrum of a Hermitian matrix: eigenvalues ascending,
/// eigenvectors as orthonormal columns aligned with the eigenvalues.
struct EigDecomposition {
    RealVector eigenvalues;
    Matrix eigenvectors;
};

/// Orthonormal spanning set of a subspace of C^n, stored as matrix columns.
struct SubspaceBasis {
    Matrix vectors;  // ambient_dim x dim, orthonormal columns

    Index ambient_dim() const { return vectors.rows(); }
    Index dim() const { return vectors.cols(); }
    Vector vector(Index k) const { return vectors.col(k); }
    /// Orthogonal projector onto the spanned subspace.
    Matrix projector() const { return vectors * vectors.adjoint(); }
};

bool is_hermitian(const Matrix& m, double tol = kHermitianTol);

/// Kronecker product; dimensions multiply.
Matrix kron(const Matrix& a, const Matrix& b);

/// Partial transpose on the first tensor factor of a (dA*dB)x(dA*dB) matrix:
/// block (i,j) of the output equals block (j,i) of the input, blocks dB x dB.
/// Linear involution; preserves trace and Frobenius norm.
Matrix partial_transpose_A(const Matrix& m, Index dA, Index dB);

/// Eigendecomposition of a Hermitian matrix. Throws std::invalid_argument if
/// the input deviates from Hermiticity by more than herm_tol.
EigDecomposition hermitian_eig(const Matrix& m, double herm_tol = kHermitianTol);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix& m, double herm_tol = kHermitianTol);

/// Hilbert-Schmidt inner product tr(A^dag B).
Complex trace_inner(const Matrix& a, const Matrix& b);

/// Orthonormal basis of the near-kernel of a Hermitian PSD matrix: the span of
/// eigenvectors with eigenvalue < tol. Throws if the matrix has an eigenvalue
/// below -tol (caller passed a non-PSD operator). Columns are phase-normalized
/// (first significant coordinate real positive) and ordered by descending
/// magnitude of that coordinate, ties broken by coordinate index, so repeated
/// runs return the same basis.
SubspaceBasis kernel_basis(const Matrix& m, double tol);

/// Canonicalize basis columns in place: deterministic phases and ordering as
/// described for kernel_basis.
void canonicalize_basis(SubspaceBasis& basis);

}  // namespace melcert

#endif
