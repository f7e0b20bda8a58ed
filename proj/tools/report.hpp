#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace hermsq::cli {

/// Result of one command: uniform rows plus WARN/FAIL lists.
/// In JSON mode everything lands in one document; in CSV mode the rows go
/// to stdout and warnings/failures to stderr. Exit status is 1 iff any
/// failure was recorded; documented WARN-class discrepancies never change
/// the exit status.
struct Report {
    std::string command;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::vector<nlohmann::ordered_json> rows;
    std::vector<std::string> warnings;
    std::vector<std::string> failures;

    int exit_code() const { return failures.empty() ? 0 : 1; }
};

std::string render_json(const Report& r);
std::string render_csv_rows(const Report& r);

/// Deterministic shortest-roundtrip double formatting shared by both
/// output formats.
std::string format_double(double v);

}  // namespace hermsq::cli
