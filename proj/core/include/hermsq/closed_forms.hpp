#pragma once

#include <functional>
#include <span>

#include "hermsq/indices.hpp"
#include "hermsq/rational.hpp"
#include "hermsq/series.hpp"

namespace hermsq {

/// Single-factor integral: 0 for odd n, otherwise (-1)^{n/2} (n-1)!!.
Rat closed_h1(int n);

/// Sign convention for the two-factor closed form. `corrected` is
/// (-1)^{(n-m)/2}, the sign direct integration produces; `printed` is the
/// commonly quoted (-1)^{(n+m)/2}, kept as a diagnostic. The two diverge
/// exactly when m (equivalently n) is odd.
enum class H2Sign { corrected, printed };

/// Two-factor integral: 0 for odd n+m, otherwise sign * (n+m-1)!!.
Rat closed_h2(int n, int m, H2Sign sign = H2Sign::corrected);

/// Three-factor integral: 0 for odd n+m+l, otherwise
/// (n+m-l-1)!!(n-m+l-1)!!(-n+m+l-1)!!.
Rat closed_h3(int n, int m, int l);

/// Evaluates the symmetric polynomial P_k at an integer point. Expected to
/// throw std::out_of_range when the requested degree is not available.
using PkEval = std::function<Rat(int k, long n, long m, long l)>;

/// Four-factor integral in factored form:
/// (-1)^k (n+m-l-k-1)!!(n-m+l-k-1)!!(-n+m+l-k-1)!! P_k(n,m,l),
/// and 0 when the index sum is odd.
Rat closed_h4(const QuadIndex& q, const PkEval& pk);

/// Four-factor integral by the index-lowering recurrence
///   H_{nmlj} = -(n-1) H_{n-2,m,l,j} + m H_{n-1,m-1,l,j}
///              + l H_{n-1,m,l-1,j} + j H_{n-1,m,l,j-1},
/// memoized on the descending-sorted key and recursing on the largest
/// index. Safe for concurrent use.
Rat recurrence_h4(const QuadIndex& q);

/// Convenience overload: 1..4 indices, shorter tuples padded with zeros.
Rat recurrence_h4(std::span<const int> indices);

/// Right-hand side of the product generating identity for 1..4 factors,
/// expanded as an exact truncated series: exp(-(1/2) sum x_i^2 +
/// sum_{i<j} x_i x_j). The sqrt(pi/2) prefactor cancels against the
/// normalization of the integrals and is omitted.
SeriesMV gf_rhs(int num_factors, int order);

/// H value extracted from a generating series: (prod indices!) times the
/// series coefficient at that exponent tuple. The index count must match
/// the series variable count; exponents beyond the truncation order throw
/// std::out_of_range.
Rat gf_coefficient_h(std::span<const int> indices, const SeriesMV& series);

/// Two-factor value from the explicitly expanded double series:
/// n! m! (-1)^{(m-n)/2} C(n+m,n) / ((n+m)/2)! / 2^{(n+m)/2}.
/// Throws std::domain_error for odd n+m.
Rat expanded_coeff_h2(int n, int m);

}  // namespace hermsq
