#pragma once

#include <array>
#include <map>
#include <string>

#include "hermsq/rational.hpp"

namespace hermsq {

/// Monomial exponents (a,b,c) for the three variable slots.
using Expo3 = std::array<int, 3>;

/// Sparse trivariate polynomial with exact rational coefficients.
class SymPoly3 {
public:
    SymPoly3() = default;

    static SymPoly3 constant(Rat c);
    static SymPoly3 monomial(const Expo3& e, Rat c);
    /// Sum of the distinct monomials in the permutation orbit of `rep`,
    /// each with coefficient 1 (e.g. {2,0,0} -> x^2 + y^2 + z^2).
    static SymPoly3 orbit_sum(const Expo3& rep);

    bool is_zero() const { return c_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    bool is_symmetric() const;

    const std::map<Expo3, Rat>& terms() const { return c_; }
    Rat coefficient(const Expo3& e) const;

    Rat eval(const Rat& x, const Rat& y, const Rat& z) const;
    Rat eval_int(long x, long y, long z) const;

    /// Fixes one variable slot to an integer value; the result no longer
    /// involves that slot.
    SymPoly3 substitute(int slot, long value) const;

    void add_term(const Expo3& e, const Rat& c);

    SymPoly3& operator+=(const SymPoly3& o);
    SymPoly3& operator-=(const SymPoly3& o);
    SymPoly3& operator*=(const Rat& s);
    friend SymPoly3 operator+(SymPoly3 a, const SymPoly3& b) { a += b; return a; }
    friend SymPoly3 operator-(SymPoly3 a, const SymPoly3& b) { a -= b; return a; }
    friend SymPoly3 operator*(SymPoly3 a, const Rat& s) { a *= s; return a; }
    friend SymPoly3 operator*(const SymPoly3& a, const SymPoly3& b);

    SymPoly3 pow(unsigned e) const;

    bool operator==(const SymPoly3& o) const { return c_ == o.c_; }

    /// Canonical text form: one line per monomial, "a b c : coefficient",
    /// sorted graded-lexicographically with the highest-degree terms first.
    std::string canonical_str() const;

private:
    std::map<Expo3, Rat> c_;
};

}  // namespace hermsq
