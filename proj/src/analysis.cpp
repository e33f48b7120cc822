#include "qcap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace qcap {

namespace {

// Floor for eigenvalues entering log2 in the entropy gradient. Keeps the
// ascent direction finite near rank-deficient outputs; backtracking absorbs
// the resulting inaccuracy there.
constexpr double kLogFloor = 1e-18;

Matrix adjoint_apply(const KrausChannel& ch, const Matrix& m) {
    Matrix out = Matrix::Zero(ch.dim_in, ch.dim_in);
    for (const Matrix& k : ch.kraus) {
        out.noalias() += k.adjoint() * m * k;
    }
    return out;
}

Matrix log2_clipped(const Matrix& m) {
    const HermitianEig eig = hermitian_eig(m);
    RealVector logs(eig.eigenvalues.size());
    for (long i = 0; i < logs.size(); ++i) {
        logs(i) = std::log2(std::max(eig.eigenvalues(i), kLogFloor));
    }
    return eig.eigenvectors * logs.asDiagonal() * eig.eigenvectors.adjoint();
}

// Deterministic standard normal from the fully specified mt19937_64 stream;
// avoids std::normal_distribution, whose output is implementation-defined.
class GaussianSource {
  public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    Matrix complex_matrix(int rows, int cols) {
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                const double re = (*this)();
                const double im = (*this)();
                m(i, j) = Complex(re, im);
            }
        }
        return m;
    }

  private:
    double uniform_open() {  // (0, 1]
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

struct RestartOutcome {
    double value;
    Matrix state;
    int iterations;
    bool converged;
};

RestartOutcome run_ascent(const CoherentInfoProblem& problem, Matrix a,
                          const OptimizerConfig& cfg) {
    double f = problem.value(a);
    double step = cfg.initial_step;
    int small_change_run = 0;
    int iter = 0;
    bool converged = false;
    while (iter < cfg.max_iterations) {
        ++iter;
        const Matrix g = cfg.gradient == GradientMode::Analytic
                             ? problem.gradient(a)
                             : problem.fd_gradient(a);
        double delta = 0.0;
        bool accepted = false;
        const Matrix candidate = a + step * g;
        try {
            const double f_new = problem.value(candidate);
            if (f_new > f) {
                delta = f_new - f;
                a = candidate;
                f = f_new;
                accepted = true;
            }
        } catch (const NotPositiveError&) {
            // step left the admissible cone; treat as a failed step
        }
        if (accepted) {
            step *= 1.1;
        } else {
            step *= 0.5;
        }
        if (std::abs(delta) < cfg.convergence_tol) {
            if (++small_change_run >= cfg.convergence_window) {
                converged = true;
                break;
            }
        } else {
            small_change_run = 0;
        }
        if (step < 1e-15) {
            converged = true;
            break;
        }
    }
    return RestartOutcome{f, CoherentInfoProblem::density_from_factor(a), iter, converged};
}

}  // namespace

std::vector<double> ppt_spectrum(const KrausChannel& ch) {
    if (ch.dim_in != ch.dim_out) {
        throw DimensionError("ppt_spectrum: channel must be square, got " +
                             std::to_string(ch.dim_in) + " -> " + std::to_string(ch.dim_out));
    }
    const ChoiMatrix j = choi(ch);
    const Matrix jt2 = partial_transpose(j.matrix, j.dim_in, j.dim_out);
    const RealVector lambda = hermitian_eigenvalues(jt2);
    return std::vector<double>(lambda.data(), lambda.data() + lambda.size());
}

PptSpectrum analytic_ppt_spectrum(const NoiseParameter& p) {
    const double sym = (1.0 - p.x) + p.x / p.d;
    const double antisym = -(1.0 - p.x) + p.x / p.d;
    std::vector<double> values;
    values.reserve(p.d * p.d);
    values.insert(values.end(), p.d * (p.d - 1) / 2, antisym);
    values.insert(values.end(), p.d * (p.d + 1) / 2, sym);
    std::sort(values.begin(), values.end());
    return PptSpectrum{std::move(values), sym, antisym, p.d, p.x};
}

double ppt_threshold(int d) {
    if (d < 2) {
        throw ParameterDomainError("ppt_threshold: d = " + std::to_string(d) + " < 2");
    }
    return static_cast<double>(d) / (d + 1);
}

double antidegradability_residual(const NoiseParameter& p) {
    const KrausChannel reconstructed =
        compose(antidegrading_map(p), depolarizing_complement(p));
    return choi_distance(reconstructed, depolarizing(p));
}

double coherent_information(const KrausChannel& ch, const Matrix& rho) {
    return coherent_information(ch, complementary(ch), rho);
}

double coherent_information(const KrausChannel& ch, const KrausChannel& comp,
                            const Matrix& rho) {
    return von_neumann_entropy(ch.apply(rho)) - von_neumann_entropy(comp.apply(rho));
}

CoherentInfoProblem::CoherentInfoProblem(const KrausChannel& ch)
    : ch_(ch), comp_(complementary(ch)) {}

Matrix CoherentInfoProblem::density_from_factor(const Matrix& a) {
    Matrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    return rho;
}

double CoherentInfoProblem::value(const Matrix& a) const {
    return coherent_information(ch_, comp_, density_from_factor(a));
}

Matrix CoherentInfoProblem::gradient(const Matrix& a) const {
    const double t = (a * a.adjoint()).trace().real();
    const Matrix rho = a * a.adjoint() / t;
    // Euclidean gradient in rho: both adjoint maps are unital, so the
    // 1/ln2 trace terms of d(-tr sigma log2 sigma) cancel between B and E.
    const Matrix g_rho = adjoint_apply(ch_, (-log2_clipped(ch_.apply(rho))).eval()) +
                         adjoint_apply(comp_, log2_clipped(comp_.apply(rho)));
    const double s = (g_rho * rho).trace().real();
    return 2.0 / t * (g_rho * a - s * a);
}

Matrix CoherentInfoProblem::fd_gradient(const Matrix& a, double step) const {
    Matrix g(a.rows(), a.cols());
    Matrix probe = a;
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) {
            const Complex orig = probe(i, j);
            probe(i, j) = orig + step;
            const double f_re_plus = value(probe);
            probe(i, j) = orig - step;
            const double f_re_minus = value(probe);
            probe(i, j) = orig + Complex(0.0, step);
            const double f_im_plus = value(probe);
            probe(i, j) = orig - Complex(0.0, step);
            const double f_im_minus = value(probe);
            probe(i, j) = orig;
            g(i, j) = Complex((f_re_plus - f_re_minus) / (2.0 * step),
                              (f_im_plus - f_im_minus) / (2.0 * step));
        }
    }
    return g;
}

CoherentInfoResult maximize_coherent_information(const KrausChannel& ch,
                                                 const OptimizerConfig& cfg) {
    if (ch.dim_in > 8) {
        throw DimensionError("maximize_coherent_information: dim_in = " +
                             std::to_string(ch.dim_in) + " exceeds the cost guard (8)");
    }
    const CoherentInfoProblem problem(ch);
    const int d = ch.dim_in;

    // Maximally mixed input as the initial incumbent; restarts must strictly
    // beat the incumbent, so ties resolve to the earliest candidate.
    const Matrix mixed = Matrix::Identity(d, d) / static_cast<double>(d);
    CoherentInfoResult best;
    best.value = coherent_information(ch, problem.complement(), mixed);
    best.optimizer_state = mixed;
    best.iterations = 0;
    best.restarts_used = cfg.restarts;
    best.converged = true;

    for (int r = 0; r < cfg.restarts; ++r) {
        GaussianSource gauss(cfg.seed + static_cast<std::uint64_t>(r));
        const Matrix a0 = gauss.complex_matrix(d, d);
        const RestartOutcome outcome = run_ascent(problem, a0, cfg);
        if (outcome.value > best.value) {
            best.value = outcome.value;
            best.optimizer_state = outcome.state;
            best.iterations = outcome.iterations;
            best.converged = outcome.converged;
        }
    }
    return best;
}

}  // namespace qcap
