#pragma once

// Deterministic random matrices, states, and channels for tests.

#include <random>
#include <vector>

#include "qcap/channel.hpp"

namespace qcap::test {

inline Matrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            m(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    return m;
}

inline Matrix random_hermitian(int n, std::mt19937_64& rng) {
    const Matrix g = random_matrix(n, n, rng);
    return 0.5 * (g + g.adjoint());
}

inline Matrix random_density(int n, std::mt19937_64& rng) {
    const Matrix a = random_matrix(n, n, rng);
    Matrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    return rho;
}

inline Matrix random_unitary(int n, std::mt19937_64& rng) {
    const Matrix g = random_matrix(n, n, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    return qr.householderQ() * Matrix::Identity(n, n);
}

// Random CPT channel from the thin QR of a Gaussian (dim*kraus_count) x dim
// matrix: the isometry's d-row blocks are the Kraus operators.
inline KrausChannel random_channel(int dim, int kraus_count, std::mt19937_64& rng) {
    const Matrix g = random_matrix(dim * kraus_count, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    const Matrix v =
        qr.householderQ() * Matrix::Identity(dim * kraus_count, dim);
    std::vector<Matrix> kraus;
    kraus.reserve(kraus_count);
    for (int a = 0; a < kraus_count; ++a) {
        kraus.push_back(v.block(a * dim, 0, dim, dim));
    }
    return KrausChannel(dim, dim, std::move(kraus));
}

}  // namespace qcap::test
