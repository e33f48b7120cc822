#include "qcap/channel_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qcap {

namespace {

using nlohmann::json;

int require_positive_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer()) {
        throw FormatError(std::string("channel file: missing integer field \"") + field + "\"");
    }
    const int v = j[field].get<int>();
    if (v < 1) {
        throw FormatError(std::string("channel file: field \"") + field +
                          "\" must be positive, got " + std::to_string(v));
    }
    return v;
}

Complex parse_entry(const json& e, int op, int row, int col) {
    const std::string where = "kraus[" + std::to_string(op) + "][" + std::to_string(row) +
                              "][" + std::to_string(col) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw FormatError("channel file: " + where + " must be a [re, im] number pair");
    }
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw FormatError("channel file: " + where + " is not finite");
    }
    return Complex(re, im);
}

}  // namespace

KrausChannel parse_channel(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("channel file: ") + e.what());
    }
    if (!j.is_object()) {
        throw FormatError("channel file: top level must be a JSON object");
    }
    const int dim_in = require_positive_int(j, "dim_in");
    const int dim_out = require_positive_int(j, "dim_out");
    if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
        throw FormatError("channel file: \"kraus\" must be a nonempty array");
    }
    std::vector<Matrix> kraus;
    kraus.reserve(j["kraus"].size());
    for (std::size_t op = 0; op < j["kraus"].size(); ++op) {
        const json& jop = j["kraus"][op];
        if (!jop.is_array() || static_cast<int>(jop.size()) != dim_out) {
            throw FormatError("channel file: kraus[" + std::to_string(op) + "] must have " +
                              std::to_string(dim_out) + " rows");
        }
        Matrix k(dim_out, dim_in);
        for (int r = 0; r < dim_out; ++r) {
            const json& jrow = jop[r];
            if (!jrow.is_array() || static_cast<int>(jrow.size()) != dim_in) {
                throw FormatError("channel file: kraus[" + std::to_string(op) + "] row " +
                                  std::to_string(r) + " must have " + std::to_string(dim_in) +
                                  " entries");
            }
            for (int c = 0; c < dim_in; ++c) {
                k(r, c) = parse_entry(jrow[c], static_cast<int>(op), r, c);
            }
        }
        kraus.push_back(std::move(k));
    }
    KrausChannel ch(dim_in, dim_out, std::move(kraus));
    const CptReport report = validate_cpt(ch);
    if (report.tp_residual >= kIngestCptTol) {
        std::ostringstream msg;
        msg << "channel file: Kraus set is not trace-preserving, max-entry residual "
            << report.tp_residual;
        throw ValidationError(msg.str(), report.tp_residual);
    }
    return ch;
}

std::string serialize_channel(const KrausChannel& ch) {
    json jops = json::array();
    for (const Matrix& k : ch.kraus) {
        json jop = json::array();
        for (int r = 0; r < ch.dim_out; ++r) {
            json jrow = json::array();
            for (int c = 0; c < ch.dim_in; ++c) {
                jrow.push_back(json::array({k(r, c).real(), k(r, c).imag()}));
            }
            jop.push_back(std::move(jrow));
        }
        jops.push_back(std::move(jop));
    }
    const json j = {{"dim_in", ch.dim_in}, {"dim_out", ch.dim_out}, {"kraus", std::move(jops)}};
    return j.dump(2) + "\n";
}

KrausChannel load_channel(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open channel file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_channel(buf.str());
}

void save_channel(const KrausChannel& ch, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot open for writing: " + path);
    }
    out << serialize_channel(ch);
    if (!out) {
        throw FormatError("write failed: " + path);
    }
}

}  // namespace qcap
