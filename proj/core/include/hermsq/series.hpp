#pragma once

#include <array>
#include <map>

#include "hermsq/rational.hpp"

namespace hermsq {

/// Exponent tuple of a multivariate series term; unused variables stay 0.
using Expo = std::array<int, 4>;

/// Truncated multivariate formal power series with exact rational
/// coefficients. Every term of total degree <= order is tracked exactly;
/// everything above the truncation order is discarded by construction,
/// so products and exponentials are exact modulo that ideal.
class SeriesMV {
public:
    SeriesMV(int num_vars, int order);

    int num_vars() const { return nv_; }
    int order() const { return order_; }

    /// Stored coefficient, zero when absent. Throws std::out_of_range for
    /// exponents beyond the truncation order (those are unknown, not zero).
    Rat coefficient(const Expo& e) const;

    void add_term(const Expo& e, const Rat& c);

    SeriesMV& operator+=(const SeriesMV& o);
    SeriesMV& scale(const Rat& s);
    friend SeriesMV operator*(const SeriesMV& a, const SeriesMV& b);

    /// exp(q) for a series with zero constant term, exact to the
    /// truncation order.
    static SeriesMV exp_of(const SeriesMV& q);

    bool is_zero() const { return c_.empty(); }
    const std::map<Expo, Rat>& terms() const { return c_; }

private:
    static int total_degree(const Expo& e) { return e[0] + e[1] + e[2] + e[3]; }

    int nv_;
    int order_;
    std::map<Expo, Rat> c_;
};

}  // namespace hermsq
