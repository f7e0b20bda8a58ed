#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hermsq {

using Int = mpz_class;

/// Arbitrary-precision rational number, kept in lowest terms with a
/// positive denominator. Zero is always 0/1, so exact equality on the
/// internal representation is value equality.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(Int(n)) {}
    Rat(const Int& n) : q_(n) {}

    Rat(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    const Int& num() const { return q_.get_num(); }
    const Int& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    double to_double() const { return q_.get_d(); }

    Rat operator-() const {
        Rat r;
        r.q_ = -q_;
        return r;
    }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

private:
    mpq_class q_;
};

inline Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace hermsq
