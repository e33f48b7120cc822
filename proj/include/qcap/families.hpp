#pragma once

#include "qcap/channel.hpp"

namespace qcap {

/// Noise strength x in [0,1] on a d-dimensional system, d >= 2.
struct NoiseParameter {
    double x;
    int d;
    NoiseParameter(double x, int d);
};

/// The real non-negative roots of the constraint system
///   beta^2 x = 1 - x,   d delta^2 = (2x-1)/x,   beta^2 + d delta^2 = 1,
/// together with xi = sqrt(x(1-x)/d). Only solvable for x >= 1/2; below that
/// d delta^2 goes negative and construction throws ParameterDomainError
/// carrying the offending value.
struct AntiDegradingParams {
    double x;
    int d;
    double beta;
    double delta;
    double xi;
    explicit AntiDegradingParams(const NoiseParameter& p);
};

/// White noise D_x(rho) = (1-x) rho + (x/d) tr(rho) I_d, with Kraus set
/// {A_0 = sqrt(1-x) I} ∪ {A_ij = sqrt(x/d)|i><j|}, list index 1 + i*d + j.
KrausChannel depolarizing(const NoiseParameter& p);

/// The complement of D_x as a closed form: d Kraus operators
///   C_b = sqrt(1-x)|0><b| + sqrt(x/d) sum_j |b,j><j|
/// into the (1+d^2)-dimensional environment {|0>, |i,j> -> 1 + i*d + j}.
/// Acts as (1-x)tr(rho)|0><0| + xi(|0><rho^T| + |rho^T><0|) + (x/d) I ⊗ rho,
/// and agrees with complementary(depolarizing(p)) as a map.
KrausChannel depolarizing_complement(const NoiseParameter& p);

/// The anti-degrading channel N: E -> B with Kraus set
///   M_k = (1/sqrt d)|k><0|, N_k = beta sum_j |j><k,j|, Q_ijk = delta|i><j,k|
/// (d + d + d^3 operators, zero operators retained), satisfying
/// N ∘ D_x^c = D_x. Requires x >= 1/2.
KrausChannel antidegrading_map(const NoiseParameter& p);

/// E_x(rho) = (1-x) rho + (x/2)(tr(rho) I - rho^T). The (x/2) normalization
/// makes the Kraus set {sqrt(1-x) I} ∪ {sqrt(x/2)(|i><j| - |j><i|), i<j}
/// trace-preserving exactly when d = 3; other d throws ParameterDomainError.
KrausChannel transpose_depolarizing(double x, int d);

/// D_x ∘ lambda: the channel contaminated by white noise,
/// rho -> (1-x) lambda(rho) + (x/d) tr(rho) I_d. Requires a square channel.
KrausChannel contaminate(const KrausChannel& lambda, double x);

}  // namespace qcap
