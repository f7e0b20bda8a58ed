#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermsq::cli {

/// Everything a run depends on; two runs with equal configs produce
/// byte-identical stdout.
struct RunConfig {
    std::string command;
    std::string format = "csv";  // csv | json (| text, pk only)
    int jobs = 1;
    std::uint64_t seed = 0;

    int max_index = 12;
    int k = 4;
    int order = 8;
    int size = 4;
    bool check = false;
    bool compare_paper = false;

    std::vector<int> indices;           // hvalue
    std::string method = "oracle";      // hvalue
    std::string suite = "all";          // verify
    std::vector<std::string> quantities;  // asym
    std::vector<int> n_values;            // asym
};

/// Command misuse distinct from check failures; exits with status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hermsq::cli
