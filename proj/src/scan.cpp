#include "qcap/scan.hpp"

#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

namespace qcap {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> scan_grid(double x_start, double x_end, int steps) {
    std::vector<double> xs;
    xs.reserve(steps);
    if (steps == 1) {
        xs.push_back(x_start);
        return xs;
    }
    for (int k = 0; k < steps; ++k) {
        // keep the endpoints exact
        const double x = (k == steps - 1)
                             ? x_end
                             : x_start + k * (x_end - x_start) / (steps - 1);
        xs.push_back(x);
    }
    return xs;
}

namespace {

ScanRecord evaluate_point(int d, double x, std::uint64_t point_seed,
                          bool with_coherent_info) {
    ScanRecord rec{};
    rec.d = d;
    rec.x = x;
    const NoiseParameter p(x, d);
    try {
        rec.residual = antidegradability_residual(p);
        rec.antidegradable_constructible = true;
    } catch (const ParameterDomainError&) {
        rec.residual = std::nullopt;
        rec.antidegradable_constructible = false;
    }
    const std::vector<double> spectrum = ppt_spectrum(depolarizing(p));
    rec.min_ppt_eig = spectrum.front();
    rec.ppt = rec.min_ppt_eig >= -kPptEigTol;
    if (with_coherent_info) {
        OptimizerConfig cfg;
        cfg.seed = point_seed;
        rec.coherent_info = maximize_coherent_information(depolarizing(p), cfg).value;
    }
    return rec;
}

}  // namespace

std::vector<ScanRecord> scan_depolarizing(const ScanOptions& opt) {
    if (opt.d < 2 || opt.d > 8) {
        throw UsageError("scan: dim must be in [2, 8], got " + std::to_string(opt.d));
    }
    if (!(opt.x_start >= 0.0 && opt.x_start <= opt.x_end && opt.x_end <= 1.0)) {
        throw UsageError("scan: require 0 <= x-start <= x-end <= 1");
    }
    if (opt.steps < 1) {
        throw UsageError("scan: steps must be >= 1");
    }
    const std::vector<double> xs = scan_grid(opt.x_start, opt.x_end, opt.steps);
    const int n = static_cast<int>(xs.size());
    std::vector<ScanRecord> records(n);

    const int workers = std::max(1, std::min(opt.threads, n));
    if (workers == 1) {
        for (int k = 0; k < n; ++k) {
            records[k] = evaluate_point(opt.d, xs[k], opt.seed + k, opt.with_coherent_info);
        }
        return records;
    }

    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int k = next.fetch_add(1); k < n; k = next.fetch_add(1)) {
                records[k] =
                    evaluate_point(opt.d, xs[k], opt.seed + k, opt.with_coherent_info);
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
    return records;
}

std::string scan_csv(const std::vector<ScanRecord>& records) {
    std::ostringstream out;
    out << "d,x,residual,min_ppt_eig,ppt,antidegradable_constructible,coherent_info\n";
    for (const ScanRecord& r : records) {
        out << r.d << ',' << format_double(r.x) << ',';
        if (r.residual) {
            out << format_double(*r.residual);
        }
        out << ',' << format_double(r.min_ppt_eig) << ',' << (r.ppt ? "true" : "false")
            << ',' << (r.antidegradable_constructible ? "true" : "false") << ',';
        if (r.coherent_info) {
            out << format_double(*r.coherent_info);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qcap
