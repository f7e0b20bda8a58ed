#pragma once

#include <array>

namespace hermsq {

/// Ordered index tuple (n,m,l,k) of a four-factor H integral. The k slot
/// is the one whose symmetric polynomial P_k appears in the factored
/// closed form.
struct QuadIndex {
    int n = 0;
    int m = 0;
    int l = 0;
    int k = 0;

    bool even_sum() const { return ((n + m + l + k) & 1) == 0; }
    std::array<int, 4> to_array() const { return {n, m, l, k}; }

    bool operator==(const QuadIndex&) const = default;
};

}  // namespace hermsq
