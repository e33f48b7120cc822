#pragma once

#include <vector>

#include "qcap/linalg.hpp"

namespace qcap {

/// Trace-preserving residual below which a Kraus set counts as CPT.
inline constexpr double kCptTol = 1e-9;
/// Channel equality threshold: Frobenius distance of unnormalized Choi matrices.
inline constexpr double kChannelEqTol = 1e-9;

/// A quantum channel as a finite Kraus set {K}, each operator dim_out x dim_in,
/// acting as rho -> sum K rho K†. Construction checks shapes only; use
/// validate_cpt for the trace-preserving diagnostic.
struct KrausChannel {
    int dim_in;
    int dim_out;
    std::vector<Matrix> kraus;

    KrausChannel(int dim_in, int dim_out, std::vector<Matrix> kraus);

    /// rho -> sum K rho K†; preserves trace, Hermiticity, and positivity.
    Matrix apply(const Matrix& rho) const;
};

struct CptReport {
    double tp_residual;
    bool ok;
};

/// Unnormalized Choi–Jamiołkowski matrix J = sum_ij |i><j| ⊗ ch(|i><j|)
/// on input⊗output, with tr(J) = dim_in.
struct ChoiMatrix {
    int dim_in;
    int dim_out;
    Matrix matrix;
};

/// Isometric extension V = sum_α K_α ⊗ |α>_E into B⊗E (B-major ordering:
/// row b*dim_env + α). dim_env equals the number of Kraus operators.
struct StinespringIsometry {
    int dim_in;
    int dim_out;
    int dim_env;
    Matrix v;
};

/// tp_residual = max-entry |sum K†K - I|; ok iff below kCptTol.
CptReport validate_cpt(const KrausChannel& ch);

/// Channel composition outer∘inner with the product Kraus set {K_o K_i}.
/// The product list is kept as-is (no pruning or rank minimization).
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

ChoiMatrix choi(const KrausChannel& ch);

StinespringIsometry stinespring(const KrausChannel& ch);

/// Channel to the environment, rho -> Tr_B(V rho V†). The complement's
/// environment basis is indexed by the Kraus-list order of `ch`.
KrausChannel complementary(const KrausChannel& ch);

/// Representation-independent channel distance (Kraus sets are not unique):
/// Frobenius distance between unnormalized Choi matrices.
double choi_distance(const KrausChannel& a, const KrausChannel& b);

KrausChannel identity_channel(int dim);

}  // namespace qcap
