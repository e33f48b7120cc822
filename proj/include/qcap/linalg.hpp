#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qcap/errors.hpp"

namespace qcap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Max-entry deviation from Hermiticity tolerated before eigendecomposition.
inline constexpr double kHermitianTol = 1e-9;
/// Eigenvalues in [-kEntropyClipTol, 0) are treated as round-off and clipped
/// to zero inside the entropy; anything below is an error.
inline constexpr double kEntropyClipTol = 1e-10;
/// Allowed |tr(rho) - 1| for entropy inputs.
inline constexpr double kUnitTraceTol = 1e-8;

enum class Subsystem { A, B };

/// Spectral decomposition of a Hermitian matrix: m = V diag(lambda) V†
/// with eigenvalues ascending and orthonormal eigenvector columns.
struct HermitianEig {
    RealVector eigenvalues;
    Matrix eigenvectors;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// Reduced matrix of an operator on A⊗B (basis |a,b> -> a*dim_b + b),
/// keeping the requested subsystem. Preserves the trace.
Matrix partial_trace(const Matrix& m, int dim_a, int dim_b, Subsystem keep);

/// Transposes the second tensor factor of an operator on A⊗B. Involutive.
Matrix partial_transpose(const Matrix& m, int dim_a, int dim_b);

/// Input must be Hermitian within kHermitianTol (max-entry |m - m†|); it is
/// symmetrized as (m + m†)/2 before the solve.
HermitianEig hermitian_eig(const Matrix& m);

/// Ascending eigenvalues only; same Hermiticity contract as hermitian_eig.
RealVector hermitian_eigenvalues(const Matrix& m);

/// Von Neumann entropy in bits, -sum lambda_i log2 lambda_i with 0 log 0 = 0.
/// Requires a density matrix: Hermitian, unit trace within kUnitTraceTol,
/// eigenvalues >= -kEntropyClipTol.
double von_neumann_entropy(const Matrix& rho);

double frobenius_distance(const Matrix& a, const Matrix& b);

}  // namespace qcap
