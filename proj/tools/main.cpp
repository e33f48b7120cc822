// qcap: scans and verifications for depolarizing-channel capacity diagnostics.
//
// Exit codes: 0 success, 1 usage error, 2 format/validation error,
// 3 out-of-domain parameters (e.g. verify with x < 1/2).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "qcap/analysis.hpp"
#include "qcap/channel_io.hpp"
#include "qcap/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFormat = 2;
constexpr int kExitDomain = 3;

// human-readable rendering for report lines (CSV keeps 17 digits)
std::string fmt_short(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct ScanArgs {
    int dim = 2;
    double x_start = 0.0;
    double x_end = 1.0;
    int steps = 11;
    bool coherent_info = false;
    std::uint64_t seed = 0;
    std::string out;
    int threads = 1;
};

struct PointArgs {
    int dim = 2;
    double x = 0.0;
};

struct ContaminateArgs {
    std::string in;
    double x = 0.0;
    std::string out;
};

int run_scan(const ScanArgs& args) {
    qcap::ScanOptions opt;
    opt.d = args.dim;
    opt.x_start = args.x_start;
    opt.x_end = args.x_end;
    opt.steps = args.steps;
    opt.with_coherent_info = args.coherent_info;
    opt.seed = args.seed;
    opt.threads = args.threads;
    const std::string csv = qcap::scan_csv(qcap::scan_depolarizing(opt));
    if (args.out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(args.out);
        if (!f) {
            throw qcap::FormatError("cannot open for writing: " + args.out);
        }
        f << csv;
    }
    return kExitOk;
}

int run_verify(const PointArgs& args) {
    if (args.dim < 2) {
        throw qcap::UsageError("verify: dim must be >= 2");
    }
    if (!(args.x >= 0.0 && args.x <= 1.0)) {
        throw qcap::UsageError("verify: x must be in [0, 1]");
    }
    const qcap::NoiseParameter p(args.x, args.dim);
    std::cout << "anti-degradability verification: d=" << p.d << ", x=" << fmt_short(p.x)
              << "\n";
    std::unique_ptr<qcap::AntiDegradingParams> maybe_params;
    try {
        maybe_params = std::make_unique<qcap::AntiDegradingParams>(p);
    } catch (const qcap::ParameterDomainError& e) {
        std::cout << "  not constructible: d*delta^2 = (2x-1)/x = "
                  << fmt_short(e.d_delta_sq) << " < 0\n"
                  << "  the Kraus parameters are real only for x >= 1/2\n";
        return kExitDomain;
    }
    const qcap::AntiDegradingParams& params = *maybe_params;
    const qcap::KrausChannel n = qcap::antidegrading_map(p);
    const qcap::KrausChannel dc = qcap::depolarizing_complement(p);
    const qcap::KrausChannel dx = qcap::depolarizing(p);
    const double residual = qcap::antidegradability_residual(p);
    std::cout << "  beta    = " << qcap::format_double(params.beta) << "\n"
              << "  delta   = " << qcap::format_double(params.delta) << "\n"
              << "  xi      = " << qcap::format_double(params.xi) << "\n"
              << "  kraus   : N has " << n.kraus.size() << ", D_x^c has " << dc.kraus.size()
              << ", D_x has " << dx.kraus.size() << "\n"
              << "  choi residual |J(N∘D_x^c) - J(D_x)|_F = " << qcap::format_double(residual)
              << " (tolerance " << fmt_short(qcap::kChannelEqTol) << ")\n";
    if (residual < qcap::kChannelEqTol) {
        std::cout << "  PASS: N ∘ D_x^c = D_x\n";
        return kExitOk;
    }
    std::cout << "  FAIL: residual above tolerance\n";
    return kExitFormat;
}

int run_ppt(const PointArgs& args) {
    if (args.dim < 2) {
        throw qcap::UsageError("ppt: dim must be >= 2");
    }
    if (!(args.x >= 0.0 && args.x <= 1.0)) {
        throw qcap::UsageError("ppt: x must be in [0, 1]");
    }
    const qcap::NoiseParameter p(args.x, args.dim);
    const qcap::PptSpectrum analytic = qcap::analytic_ppt_spectrum(p);
    const std::vector<double> numeric = qcap::ppt_spectrum(qcap::depolarizing(p));
    const double threshold = qcap::ppt_threshold(p.d);
    std::cout << "PPT diagnostics: d=" << p.d << ", x=" << fmt_short(p.x) << "\n"
              << "  symmetric eigenvalue     (1-x)+x/d = "
              << qcap::format_double(analytic.sym_value) << "  (multiplicity "
              << p.d * (p.d + 1) / 2 << ")\n"
              << "  antisymmetric eigenvalue -(1-x)+x/d = "
              << qcap::format_double(analytic.antisym_value) << "  (multiplicity "
              << p.d * (p.d - 1) / 2 << ")\n"
              << "  numeric min eigenvalue   = " << qcap::format_double(numeric.front()) << "\n"
              << "  ppt threshold d/(d+1)    = " << qcap::format_double(threshold) << "\n"
              << "  ppt                      = "
              << (numeric.front() >= -qcap::kPptEigTol ? "true" : "false") << "\n";
    return kExitOk;
}

int run_contaminate(const ContaminateArgs& args) {
    if (!(args.x >= 0.0 && args.x <= 1.0)) {
        throw qcap::UsageError("contaminate: x must be in [0, 1]");
    }
    const qcap::KrausChannel lambda = qcap::load_channel(args.in);
    const qcap::KrausChannel composed = qcap::contaminate(lambda, args.x);
    qcap::save_channel(composed, args.out);
    std::cout << "wrote " << composed.dim_in << " -> " << composed.dim_out
              << " channel with " << composed.kraus.size() << " Kraus operators to "
              << args.out << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"depolarizing-channel anti-degradability and PPT diagnostics"};
    app.require_subcommand(1);

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand(
        "scan-depolarizing", "Scan (d, x) grid points and emit a CSV report");
    scan->add_option("--dim", scan_args.dim, "Hilbert-space dimension d (2..8)")->required();
    scan->add_option("--x-start", scan_args.x_start, "grid start (default 0)");
    scan->add_option("--x-end", scan_args.x_end, "grid end (default 1)");
    scan->add_option("--steps", scan_args.steps, "number of grid points (default 11)");
    scan->add_flag("--coherent-info", scan_args.coherent_info,
                   "also maximize one-shot coherent information per point (slow)");
    scan->add_option("--seed", scan_args.seed, "base optimizer seed (default 0)");
    scan->add_option("--out", scan_args.out, "output file (default stdout)");
    scan->add_option("--threads", scan_args.threads,
                     "worker threads; output is independent of this (default 1)");

    PointArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Verify the anti-degradability identity N ∘ D_x^c = D_x at one point");
    verify->add_option("--dim", verify_args.dim, "Hilbert-space dimension d")->required();
    verify->add_option("--x", verify_args.x, "noise strength x")->required();

    ContaminateArgs cont_args;
    CLI::App* cont = app.add_subcommand(
        "contaminate", "Compose a channel file with depolarizing noise, D_x ∘ Λ");
    cont->add_option("--in", cont_args.in, "input channel JSON")->required();
    cont->add_option("--x", cont_args.x, "noise strength x")->required();
    cont->add_option("--out", cont_args.out, "output channel JSON")->required();

    PointArgs ppt_args;
    CLI::App* ppt = app.add_subcommand(
        "ppt", "Report the Choi partial-transpose spectrum at one point");
    ppt->add_option("--dim", ppt_args.dim, "Hilbert-space dimension d")->required();
    ppt->add_option("--x", ppt_args.x, "noise strength x")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (scan->parsed()) {
            return run_scan(scan_args);
        }
        if (verify->parsed()) {
            return run_verify(verify_args);
        }
        if (cont->parsed()) {
            return run_contaminate(cont_args);
        }
        if (ppt->parsed()) {
            return run_ppt(ppt_args);
        }
    } catch (const qcap::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qcap::ParameterDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const qcap::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const qcap::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    }
    return kExitUsage;
}
