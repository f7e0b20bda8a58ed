#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hermsq::cli {

std::string format_double(double v) {
    char buf[64];
    // round-trippable and stable across runs
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back = 0.0;
    std::sscanf(buf, "%lg", &back);
    for (int prec = 1; prec <= 16; ++prec) {
        char shorter[64];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
        std::sscanf(shorter, "%lg", &back);
        if (back == v) return shorter;
    }
    return buf;
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json doc;
    doc["command"] = r.command;
    doc["config"] = r.config;
    doc["rows"] = r.rows;
    doc["warnings"] = r.warnings;
    doc["failures"] = r.failures;
    return doc.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_cell(const nlohmann::ordered_json& v) {
    if (v.is_string()) return csv_quote(v.get<std::string>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_null()) return "";
    return v.dump();
}

}  // namespace

std::string render_csv_rows(const Report& r) {
    std::ostringstream os;
    if (r.rows.empty()) return os.str();
    bool first = true;
    for (const auto& [key, value] : r.rows.front().items()) {
        (void)value;
        if (!first) os << ',';
        os << csv_quote(key);
        first = false;
    }
    os << '\n';
    for (const auto& row : r.rows) {
        first = true;
        for (const auto& [key, value] : row.items()) {
            (void)key;
            if (!first) os << ',';
            os << csv_cell(value);
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hermsq::cli
