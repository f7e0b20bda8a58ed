#pragma once

#include <array>
#include <vector>

#include "hermsq/rational.hpp"

namespace hermsq {

/// det[H_{n+i+j}(x)]_{i,j=0..r-1}, integrated against the normalized
/// squared weight. Multiply by sqrt(pi/2) to undo the normalization.
struct DetSpec {
    int n = 0;
    int r = 4;
};

struct DnTerm {
    int sign;                    // permutation parity
    std::array<int, 4> indices;  // n+i+sigma(i)
};

/// The 24 signed four-index terms of the r = 4 expansion; any two entries
/// of a term differ by at most 6. Throws std::invalid_argument for r != 4.
std::vector<DnTerm> dn_terms(const DetSpec& spec);

/// Permutation expansion: sum of sgn(sigma) * H integral over all r!
/// permutations, each evaluated by the brute-force oracle.
Rat dn_by_permutations(const DetSpec& spec);

/// Direct route: expand the determinant as one exact polynomial, then
/// integrate it.
Rat dn_by_polynomial(const DetSpec& spec);

/// Both routes, cross-checked; throws std::logic_error if they ever
/// disagree.
Rat dn_normalized(const DetSpec& spec);

}  // namespace hermsq
