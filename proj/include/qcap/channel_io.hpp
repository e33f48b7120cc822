#pragma once

#include <string>

#include "qcap/channel.hpp"

namespace qcap {

/// Channel files admit externally produced data, so ingestion tolerates a
/// larger trace-preserving residual than internal construction.
inline constexpr double kIngestCptTol = 1e-6;

/// Parses the JSON channel format:
///   {"dim_in": n, "dim_out": m, "kraus": [[[[re, im], ...] per row] per op]}
/// Structural problems throw FormatError with a field diagnostic; a Kraus set
/// with trace-preserving residual >= kIngestCptTol throws ValidationError
/// carrying the residual.
KrausChannel parse_channel(const std::string& text);

std::string serialize_channel(const KrausChannel& ch);

KrausChannel load_channel(const std::string& path);

void save_channel(const KrausChannel& ch, const std::string& path);

}  // namespace qcap
