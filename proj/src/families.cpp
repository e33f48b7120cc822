#include "qcap/families.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace qcap {

namespace {

// Environment basis: index 0 -> |0>, index 1 + i*d + j -> |i,j>, 0-based i,j.
int env_index(int d, int i, int j) {
    return 1 + i * d + j;
}

}  // namespace

NoiseParameter::NoiseParameter(double x_, int d_) : x(x_), d(d_) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw ParameterDomainError("NoiseParameter: x = " + std::to_string(x) +
                                   " outside [0,1]");
    }
    if (d < 2) {
        throw ParameterDomainError("NoiseParameter: d = " + std::to_string(d) + " < 2");
    }
}

AntiDegradingParams::AntiDegradingParams(const NoiseParameter& p) : x(p.x), d(p.d) {
    const double d_delta_sq = (2.0 * x - 1.0) / x;  // x >= 1/2 implies x > 0
    if (x < 0.5) {
        throw ParameterDomainError(
            "anti-degrading map not constructible: d*delta^2 = (2x-1)/x = " +
                std::to_string(d_delta_sq) + " < 0 at x = " + std::to_string(x),
            d_delta_sq);
    }
    beta = std::sqrt((1.0 - x) / x);
    delta = std::sqrt(d_delta_sq / d);
    xi = std::sqrt(x * (1.0 - x) / d);
}

KrausChannel depolarizing(const NoiseParameter& p) {
    const int d = p.d;
    std::vector<Matrix> kraus;
    kraus.reserve(1 + d * d);
    kraus.push_back(std::sqrt(1.0 - p.x) * Matrix::Identity(d, d));
    const double amp = std::sqrt(p.x / d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Matrix k = Matrix::Zero(d, d);
            k(i, j) = amp;
            kraus.push_back(std::move(k));
        }
    }
    return KrausChannel(d, d, std::move(kraus));
}

KrausChannel depolarizing_complement(const NoiseParameter& p) {
    const int d = p.d;
    const int d_env = 1 + d * d;
    const double a0 = std::sqrt(1.0 - p.x);
    const double amp = std::sqrt(p.x / d);
    std::vector<Matrix> kraus;
    kraus.reserve(d);
    for (int b = 0; b < d; ++b) {
        Matrix c = Matrix::Zero(d_env, d);
        c(0, b) = a0;
        for (int j = 0; j < d; ++j) {
            c(env_index(d, b, j), j) = amp;
        }
        kraus.push_back(std::move(c));
    }
    return KrausChannel(d, d_env, std::move(kraus));
}

KrausChannel antidegrading_map(const NoiseParameter& p) {
    const AntiDegradingParams params(p);
    const int d = p.d;
    const int d_env = 1 + d * d;
    std::vector<Matrix> kraus;
    kraus.reserve(2 * d + d * d * d);
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) {
        Matrix m = Matrix::Zero(d, d_env);
        m(k, 0) = inv_sqrt_d;
        kraus.push_back(std::move(m));
    }
    for (int k = 0; k < d; ++k) {
        Matrix n = Matrix::Zero(d, d_env);
        for (int j = 0; j < d; ++j) {
            n(j, env_index(d, k, j)) = params.beta;
        }
        kraus.push_back(std::move(n));
    }
    // Zero operators (delta = 0 at x = 1/2) are retained to keep the count at
    // d + d + d^3 across the whole constructible range.
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                Matrix q = Matrix::Zero(d, d_env);
                q(i, env_index(d, j, k)) = params.delta;
                kraus.push_back(std::move(q));
            }
        }
    }
    return KrausChannel(d_env, d, std::move(kraus));
}

KrausChannel transpose_depolarizing(double x, int d) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw ParameterDomainError("transpose_depolarizing: x = " + std::to_string(x) +
                                   " outside [0,1]");
    }
    if (d != 3) {
        throw ParameterDomainError(
            "transpose_depolarizing: the (x/2) normalization is trace-preserving only for "
            "d = 3, got d = " + std::to_string(d));
    }
    std::vector<Matrix> kraus;
    kraus.reserve(1 + d * (d - 1) / 2);
    kraus.push_back(std::sqrt(1.0 - x) * Matrix::Identity(d, d));
    const double amp = std::sqrt(x / 2.0);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            Matrix k = Matrix::Zero(d, d);
            k(i, j) = amp;
            k(j, i) = -amp;
            kraus.push_back(std::move(k));
        }
    }
    return KrausChannel(d, d, std::move(kraus));
}

KrausChannel contaminate(const KrausChannel& lambda, double x) {
    if (lambda.dim_in != lambda.dim_out) {
        throw DimensionError("contaminate: channel must be square, got " +
                             std::to_string(lambda.dim_in) + " -> " +
                             std::to_string(lambda.dim_out));
    }
    return compose(depolarizing(NoiseParameter(x, lambda.dim_out)), lambda);
}

}  // namespace qcap
