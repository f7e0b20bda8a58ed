#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hermsq/rational.hpp"

namespace hermsq {

/// Natural log of |x|, accurate to better than 1e-9 relative, computed
/// from the bit lengths and leading mantissas of numerator and
/// denominator. Never converts the full big rational to a bounded float,
/// so it works far beyond double range. Throws std::domain_error at 0.
double log_magnitude(const Rat& x);

/// One diagnostic row comparing an exactly computed quantity against its
/// predicted large-n behaviour. For the three growth laws the comparison
/// happens in log space: `predicted` is the predicted ln|H| and
/// `abs_error` is |log_magnitude(exact) - predicted|. For ratio rows the
/// columns are in plain value space.
struct AsymRow {
    int n = 0;
    std::string quantity;
    Rat exact;
    double predicted = 0.0;
    double abs_error = 0.0;
};

/// Labels accepted by asym_table.
std::span<const std::string_view> asym_catalogue();

/// Rows for one catalogued quantity at the requested n values. Values of
/// n for which the quantity is undefined (odd n for the growth laws and
/// the triple-index ratios, small n for shifted ratios) are skipped.
/// Unknown labels throw std::invalid_argument listing the catalogue.
std::vector<AsymRow> asym_table(std::string_view quantity, std::span<const int> ns);

}  // namespace hermsq
