#pragma once

#include <stdexcept>
#include <string>

namespace qcap {

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HermiticityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPositiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NormalizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter outside the constructible domain. For the anti-degrading map
/// this carries the would-be d*delta^2 = (2x-1)/x value, whose sign is the
/// phase boundary between the constructible and non-constructible regimes.
struct ParameterDomainError : std::runtime_error {
    explicit ParameterDomainError(const std::string& what, double d_delta_sq = 0.0)
        : std::runtime_error(what), d_delta_sq(d_delta_sq) {}
    double d_delta_sq;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A well-formed input that fails a semantic check (e.g. a channel file whose
/// Kraus operators are not trace-preserving); carries the offending residual.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual(residual) {}
    double residual;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qcap
