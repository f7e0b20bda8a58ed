#pragma once

#include <span>

#include "hermsq/polynomial.hpp"

namespace hermsq {

/// Physicists' Hermite polynomial H_n, built by the three-term recurrence
/// H_n = 2x H_{n-1} - 2(n-1) H_{n-2}. Leading coefficient 2^n, degree n.
/// Rows are cached per process; the returned reference stays valid for the
/// lifetime of the program and concurrent callers are safe.
const Poly1& hermite(int n);

/// Exact product of Hermite polynomials; the empty product is 1.
Poly1 hermite_product(std::span<const int> indices);

}  // namespace hermsq
