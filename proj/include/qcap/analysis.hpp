#pragma once

#include <cstdint>
#include <vector>

#include "qcap/families.hpp"

namespace qcap {

/// PPT flag threshold on the minimum Choi-partial-transpose eigenvalue.
inline constexpr double kPptEigTol = 1e-10;

/// Closed-form spectrum of J(D_x)^{T2}: sym_value = (1-x) + x/d with
/// multiplicity d(d+1)/2 and antisym_value = -(1-x) + x/d with multiplicity
/// d(d-1)/2; `eigenvalues` holds all d^2 of them ascending.
struct PptSpectrum {
    std::vector<double> eigenvalues;
    double sym_value;
    double antisym_value;
    int d;
    double x;
};

/// Ascending eigenvalues of the partially transposed (second factor)
/// unnormalized Choi matrix. Requires a square channel.
std::vector<double> ppt_spectrum(const KrausChannel& ch);

PptSpectrum analytic_ppt_spectrum(const NoiseParameter& p);

/// d/(d+1), the entanglement-binding boundary of the depolarizing channel;
/// strictly above 1/2 for every d >= 2.
double ppt_threshold(int d);

/// Choi Frobenius distance between antidegrading_map ∘ depolarizing_complement
/// and depolarizing at the same parameters. Requires x >= 1/2.
double antidegradability_residual(const NoiseParameter& p);

/// I_c(rho, ch) = S(ch(rho)) - S(ch^c(rho)) in bits.
double coherent_information(const KrausChannel& ch, const Matrix& rho);

/// Overload reusing a precomputed complement.
double coherent_information(const KrausChannel& ch, const KrausChannel& comp,
                            const Matrix& rho);

enum class GradientMode { Analytic, FiniteDifference };

struct OptimizerConfig {
    int restarts = 20;
    std::uint64_t seed = 0;
    int max_iterations = 500;
    double initial_step = 0.1;
    /// Converged once |delta I_c| stays below this for convergence_window
    /// consecutive iterations.
    double convergence_tol = 1e-9;
    int convergence_window = 10;
    GradientMode gradient = GradientMode::Analytic;
};

struct CoherentInfoResult {
    double value = 0.0;
    Matrix optimizer_state;  // the density matrix achieving `value`
    int iterations = 0;
    int restarts_used = 0;
    bool converged = false;
};

/// I_c as a function of an unconstrained complex factor A via
/// rho = A A† / tr(A A†), with the channel's complement cached.
class CoherentInfoProblem {
  public:
    explicit CoherentInfoProblem(const KrausChannel& ch);

    double value(const Matrix& a) const;

    /// Euclidean gradient with respect to the real and imaginary parts of A,
    /// packed as a complex matrix G: dI_c = sum_ij Re(G_ij) dRe(A_ij)
    /// + Im(G_ij) dIm(A_ij). Derived from the adjoint channels.
    Matrix gradient(const Matrix& a) const;

    /// Central finite differences on every real coordinate; same packing.
    Matrix fd_gradient(const Matrix& a, double step = 1e-6) const;

    static Matrix density_from_factor(const Matrix& a);

    const KrausChannel& channel() const { return ch_; }
    const KrausChannel& complement() const { return comp_; }

  private:
    KrausChannel ch_;
    KrausChannel comp_;
};

/// Multi-restart gradient ascent of I_c over density matrices. Deterministic
/// for a fixed seed: restart r uses seed + r, results merge by max value with
/// the earliest candidate winning ties. The maximally mixed input is always
/// evaluated as the initial incumbent, so value >= I_c(I/d). Guards against
/// channels with dim_in > 8.
CoherentInfoResult maximize_coherent_information(const KrausChannel& ch,
                                                 const OptimizerConfig& cfg = {});

}  // namespace qcap
