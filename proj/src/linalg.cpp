#include "qcap/linalg.hpp"

#include <cmath>
#include <string>

namespace qcap {

namespace {

void require_square(const Matrix& m, int dim_a, int dim_b, const char* who) {
    const long expected = static_cast<long>(dim_a) * dim_b;
    if (dim_a < 1 || dim_b < 1 || m.rows() != expected || m.cols() != expected) {
        throw DimensionError(std::string(who) + ": expected a " + std::to_string(expected) +
                             "x" + std::to_string(expected) + " matrix for dims (" +
                             std::to_string(dim_a) + "," + std::to_string(dim_b) + "), got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

double hermiticity_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::SelfAdjointEigenSolver<Matrix> solve_hermitian(const Matrix& m, bool with_vectors) {
    if (m.rows() != m.cols()) {
        throw HermiticityError("hermitian_eig: matrix is not square (" +
                               std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
    }
    const double defect = hermiticity_defect(m);
    if (defect > kHermitianTol) {
        throw HermiticityError("hermitian_eig: max |m - m†| = " + std::to_string(defect) +
                               " exceeds tolerance");
    }
    const Matrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(
        sym, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw HermiticityError("hermitian_eig: eigensolver failed to converge");
    }
    return solver;
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix partial_trace(const Matrix& m, int dim_a, int dim_b, Subsystem keep) {
    require_square(m, dim_a, dim_b, "partial_trace");
    if (keep == Subsystem::A) {
        Matrix out = Matrix::Zero(dim_a, dim_a);
        for (int a = 0; a < dim_a; ++a) {
            for (int a2 = 0; a2 < dim_a; ++a2) {
                Complex sum = 0.0;
                for (int b = 0; b < dim_b; ++b) {
                    sum += m(a * dim_b + b, a2 * dim_b + b);
                }
                out(a, a2) = sum;
            }
        }
        return out;
    }
    Matrix out = Matrix::Zero(dim_b, dim_b);
    for (int b = 0; b < dim_b; ++b) {
        for (int b2 = 0; b2 < dim_b; ++b2) {
            Complex sum = 0.0;
            for (int a = 0; a < dim_a; ++a) {
                sum += m(a * dim_b + b, a * dim_b + b2);
            }
            out(b, b2) = sum;
        }
    }
    return out;
}

Matrix partial_transpose(const Matrix& m, int dim_a, int dim_b) {
    require_square(m, dim_a, dim_b, "partial_transpose");
    Matrix out(m.rows(), m.cols());
    for (int a = 0; a < dim_a; ++a) {
        for (int a2 = 0; a2 < dim_a; ++a2) {
            for (int b = 0; b < dim_b; ++b) {
                for (int b2 = 0; b2 < dim_b; ++b2) {
                    out(a * dim_b + b2, a2 * dim_b + b) = m(a * dim_b + b, a2 * dim_b + b2);
                }
            }
        }
    }
    return out;
}

HermitianEig hermitian_eig(const Matrix& m) {
    auto solver = solve_hermitian(m, true);
    return HermitianEig{solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const Matrix& m) {
    return solve_hermitian(m, false).eigenvalues();
}

double von_neumann_entropy(const Matrix& rho) {
    const double trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (trace_defect > kUnitTraceTol) {
        throw NormalizationError("von_neumann_entropy: tr(rho) deviates from 1 by " +
                                 std::to_string(trace_defect));
    }
    const RealVector lambda = hermitian_eigenvalues(rho);
    if (lambda(0) < -kEntropyClipTol) {
        throw NotPositiveError("von_neumann_entropy: eigenvalue " + std::to_string(lambda(0)) +
                               " below -1e-10");
    }
    double entropy = 0.0;
    for (long i = 0; i < lambda.size(); ++i) {
        const double v = lambda(i);
        if (v > 0.0) {
            entropy -= v * std::log2(v);
        }
    }
    return entropy;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("frobenius_distance: shape mismatch (" + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                             "x" + std::to_string(b.cols()) + ")");
    }
    return (a - b).norm();
}

}  // namespace qcap
