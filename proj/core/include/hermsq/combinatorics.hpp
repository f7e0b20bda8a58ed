#pragma once

#include <span>

#include "hermsq/rational.hpp"

namespace hermsq {

/// Double factorial n!! = n(n-2)(n-4)..., with 0!! = (-1)!! = 1, extended
/// to negative odd arguments through a!! = (a+2)!!/(a+2):
///   (-3)!! = -1,  (-5)!! = 1/3,  (-7)!! = -1/15, ...
/// Never zero on its domain. Negative even arguments are undefined and
/// throw std::domain_error.
Rat double_factorial(long a);

Int factorial(unsigned long n);

/// p!/(k!(p-k)!). Throws std::domain_error when k > p.
Int binomial(unsigned long p, unsigned long k);

bool is_even_sum(std::span<const int> indices);

}  // namespace hermsq
