#pragma once

#include <vector>

#include "hermsq/rational.hpp"

namespace hermsq {

/// Dense univariate polynomial with exact integer coefficients;
/// coeff(i) is the coefficient of x^i. The zero polynomial carries no
/// coefficients and reports degree -1.
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly1 constant(Int c);
    static Poly1 monomial(int power, Int c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }

    /// Coefficient of x^i; zero outside the stored range.
    const Int& coeff(int i) const;

    /// Leading coefficient; the polynomial must be nonzero.
    const Int& leading() const;

    Poly1 derivative() const;

    Poly1& operator+=(const Poly1& o);
    Poly1& operator-=(const Poly1& o);
    Poly1& operator*=(const Int& s);

    friend Poly1 operator+(Poly1 a, const Poly1& b) { a += b; return a; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { a -= b; return a; }
    friend Poly1 operator*(Poly1 a, const Int& s) { a *= s; return a; }

    /// Exact convolution product.
    friend Poly1 operator*(const Poly1& a, const Poly1& b);

    bool operator==(const Poly1& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<Int> c_;
};

}  // namespace hermsq
