#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcap/analysis.hpp"

namespace qcap {

/// One grid point of a depolarizing-channel scan. `residual` is absent where
/// the anti-degrading map is not constructible (x < 1/2); `coherent_info` is
/// absent unless requested.
struct ScanRecord {
    int d;
    double x;
    std::optional<double> residual;
    double min_ppt_eig;
    bool ppt;
    std::optional<double> coherent_info;
    bool antidegradable_constructible;
};

struct ScanOptions {
    int d = 2;
    double x_start = 0.0;
    double x_end = 1.0;
    int steps = 11;
    bool with_coherent_info = false;
    std::uint64_t seed = 0;
    int threads = 1;
};

/// x_k = x_start + k (x_end - x_start)/(steps-1), endpoints exact;
/// a single point at x_start when steps == 1.
std::vector<double> scan_grid(double x_start, double x_end, int steps);

/// Evaluates every grid point (concurrently when threads > 1). Results are
/// independent of scheduling: point k derives its optimizer seed as seed + k
/// and rows are emitted in grid order.
std::vector<ScanRecord> scan_depolarizing(const ScanOptions& opt);

/// CSV with header d,x,residual,min_ppt_eig,ppt,antidegradable_constructible,
/// coherent_info; floats at 17 significant digits, absent values empty.
std::string scan_csv(const std::vector<ScanRecord>& records);

/// 17-significant-digit rendering (lossless double round-trip).
std::string format_double(double v);

}  // namespace qcap
