#include "qcap/channel.hpp"

#include <string>
#include <utility>

namespace qcap {

KrausChannel::KrausChannel(int dim_in_, int dim_out_, std::vector<Matrix> kraus_)
    : dim_in(dim_in_), dim_out(dim_out_), kraus(std::move(kraus_)) {
    if (dim_in < 1 || dim_out < 1) {
        throw DimensionError("KrausChannel: dimensions must be positive");
    }
    if (kraus.empty()) {
        throw DimensionError("KrausChannel: empty Kraus list");
    }
    for (std::size_t i = 0; i < kraus.size(); ++i) {
        if (kraus[i].rows() != dim_out || kraus[i].cols() != dim_in) {
            throw DimensionError("KrausChannel: operator " + std::to_string(i) + " is " +
                                 std::to_string(kraus[i].rows()) + "x" +
                                 std::to_string(kraus[i].cols()) + ", expected " +
                                 std::to_string(dim_out) + "x" + std::to_string(dim_in));
        }
    }
}

CptReport validate_cpt(const KrausChannel& ch) {
    Matrix sum = Matrix::Zero(ch.dim_in, ch.dim_in);
    for (const Matrix& k : ch.kraus) {
        sum.noalias() += k.adjoint() * k;
    }
    const double residual = (sum - Matrix::Identity(ch.dim_in, ch.dim_in)).cwiseAbs().maxCoeff();
    return CptReport{residual, residual < kCptTol};
}

Matrix KrausChannel::apply(const Matrix& rho) const {
    if (rho.rows() != dim_in || rho.cols() != dim_in) {
        throw DimensionError("apply: state is " + std::to_string(rho.rows()) + "x" +
                             std::to_string(rho.cols()) + ", channel input dim is " +
                             std::to_string(dim_in));
    }
    Matrix out = Matrix::Zero(dim_out, dim_out);
    for (const Matrix& k : kraus) {
        out.noalias() += k * rho * k.adjoint();
    }
    return out;
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
    if (outer.dim_in != inner.dim_out) {
        throw DimensionError("compose: outer input dim " + std::to_string(outer.dim_in) +
                             " != inner output dim " + std::to_string(inner.dim_out));
    }
    std::vector<Matrix> kraus;
    kraus.reserve(outer.kraus.size() * inner.kraus.size());
    for (const Matrix& ko : outer.kraus) {
        for (const Matrix& ki : inner.kraus) {
            kraus.push_back(ko * ki);
        }
    }
    return KrausChannel(inner.dim_in, outer.dim_out, std::move(kraus));
}

ChoiMatrix choi(const KrausChannel& ch) {
    const int d_in = ch.dim_in;
    const int d_out = ch.dim_out;
    // J = sum_K w_K w_K† with w_K = sum_i |i> ⊗ K|i>; rank-1 per Kraus operator.
    Matrix j = Matrix::Zero(d_in * d_out, d_in * d_out);
    Eigen::VectorXcd w(d_in * d_out);
    for (const Matrix& k : ch.kraus) {
        for (int i = 0; i < d_in; ++i) {
            w.segment(i * d_out, d_out) = k.col(i);
        }
        j.noalias() += w * w.adjoint();
    }
    return ChoiMatrix{d_in, d_out, std::move(j)};
}

StinespringIsometry stinespring(const KrausChannel& ch) {
    const int n = static_cast<int>(ch.kraus.size());
    Matrix v = Matrix::Zero(ch.dim_out * n, ch.dim_in);
    for (int alpha = 0; alpha < n; ++alpha) {
        for (int b = 0; b < ch.dim_out; ++b) {
            v.row(b * n + alpha) = ch.kraus[alpha].row(b);
        }
    }
    return StinespringIsometry{ch.dim_in, ch.dim_out, n, std::move(v)};
}

KrausChannel complementary(const KrausChannel& ch) {
    const int n = static_cast<int>(ch.kraus.size());
    // C_b[alpha, i] = K_alpha[b, i]: the complement of the complement
    // reproduces the original Kraus list exactly.
    std::vector<Matrix> comp;
    comp.reserve(ch.dim_out);
    for (int b = 0; b < ch.dim_out; ++b) {
        Matrix c(n, ch.dim_in);
        for (int alpha = 0; alpha < n; ++alpha) {
            c.row(alpha) = ch.kraus[alpha].row(b);
        }
        comp.push_back(std::move(c));
    }
    return KrausChannel(ch.dim_in, n, std::move(comp));
}

double choi_distance(const KrausChannel& a, const KrausChannel& b) {
    return frobenius_distance(choi(a).matrix, choi(b).matrix);
}

KrausChannel identity_channel(int dim) {
    return KrausChannel(dim, dim, {Matrix::Identity(dim, dim)});
}

}  // namespace qcap
