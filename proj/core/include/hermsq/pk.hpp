#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hermsq/closed_forms.hpp"
#include "hermsq/sym_poly.hpp"

namespace hermsq {

/// Recovers P_k as the unique polynomial of per-variable degree <= 2k
/// through the exact values (-1)^k H_{nmlk} / prefactor on a parity-valid
/// tensor grid, by tensorized Newton divided differences. Symmetric of
/// total degree exactly 2k for k >= 1.
SymPoly3 pk_interpolate(int k);

/// Value of P_n at an integer point by the index-lowering recurrence
///   P_n(m,l,j) = -(n-1)(m+l-j-n+1)(m-l+j-n+1)(-m+l+j-n+1) P_{n-2}(m,l,j)
///                - m(-m+l+j-n+1) P_{n-1}(m-1,l,j)
///                - l(m-l+j-n+1)  P_{n-1}(m,l-1,j)
///                - j(m+l-j-n+1)  P_{n-1}(m,l,j-1)
/// with P_0 = 1. Parity-free: valid at every non-negative integer point.
Rat pk_value_via_recurrence(int n, long m, long l, long j);

struct RankDeficiencyError : std::runtime_error {
    explicit RankDeficiencyError(int nullity_);
    int nullity;
};

/// Recovers P_k by the ansatz procedure: a symmetric monomial-orbit basis
/// of total degree <= 2k, constrained by the substitution identities
/// P_k(j,m,n) = prod_{t=0}^{k-j-1} (m-n-k+j+1+2t)^2 P_j(k,m,n) for
/// j = 0..k-1 at integer sample points, solved as an exact linear system.
/// Throws RankDeficiencyError when the constraints do not pin the
/// coefficients down.
SymPoly3 pk_ansatz_solve(int k);

/// Exact polynomial identity check of the substitution recursion for one
/// (k, j) pair, 0 <= j < k.
bool pk_recursion_check(int k, int j, const SymPoly3& p_k, const SymPoly3& p_j);

/// Product of the six double factorials
///   (l+m-n-k-1)!!(l-m+n-k-1)!!(-l+m+n-k-1)!!
///   (-l+m-n+k-1)!!(-l-m+n+k-1)!!(l-m-n+k-1)!!.
/// Requires an even index sum (throws std::domain_error otherwise).
/// Evaluates to (-1)^{(n+m+l+k)/2}, not identically 1.
Rat triviality_product(int n, int m, int l, int k);

/// Lazily interpolated table of P_0..P_k; grows on demand, thread-safe.
class PkTable {
public:
    /// Unlimited by default; a non-negative cap makes eval() throw
    /// std::out_of_range above it (the unavailable-degree contract of the
    /// factored closed form).
    explicit PkTable(int max_k = -1) : max_k_(max_k) {}

    const SymPoly3& get(int k);
    Rat eval(int k, long n, long m, long l);
    PkEval evaluator();

private:
    int max_k_;
    std::mutex mu_;
    std::vector<std::unique_ptr<const SymPoly3>> by_k_;
};

struct HsqCheck {
    bool holds_plus = false;     ///< H^2 equals the P product as is
    bool holds_printed = false;  ///< H^2 equals it with the (-1)^{sum/2} factor
};

/// Squared-value identity
///   H^2 = ((-l+m+n-k-1)!!)^2 P_l(k,m,n) P_k(l,m,n)
/// with the roles (k,l,m,n) taken in tuple order (q.n,q.m,q.l,q.k).
/// Reports which overall sign matches; the verified sign is +1.
HsqCheck hsq_identity_check(const QuadIndex& q, PkTable& pks);

/// Fourth-power identity
///   H^4 = P_l(k,m,n) P_m(k,n,l) P_n(k,m,l) P_k(l,m,n)
/// for even index sums, roles in tuple order.
bool h4_identity_check(const QuadIndex& q, PkTable& pks);

/// Cross-multiplied ratio identity
///   P_k(l,m,n) ((m-n-k+l-1)!!)^2 = P_l(k,m,n) ((m-n+k-l-1)!!)^2
/// checked at all (m,n) in [0,radius]^2 where both double-factorial
/// arguments are in-domain.
bool ratio_identity_check(int k, int l, PkTable& pks, int radius = 12);

/// Expanded monomial form of the published low-degree displays, k <= 5.
SymPoly3 reference_pk(int k);

}  // namespace hermsq
