#include "hermsq/polynomial.hpp"

#include <stdexcept>

namespace hermsq {

namespace {
const Int kZero{0};
}

Poly1 Poly1::constant(Int c) {
    std::vector<Int> v;
    if (c != 0) v.push_back(std::move(c));
    return Poly1(std::move(v));
}

Poly1 Poly1::monomial(int power, Int c) {
    if (c == 0) return Poly1();
    std::vector<Int> v(static_cast<std::size_t>(power) + 1);
    v.back() = std::move(c);
    return Poly1(std::move(v));
}

const Int& Poly1::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const Int& Poly1::leading() const {
    if (c_.empty()) throw std::logic_error("Poly1::leading: zero polynomial");
    return c_.back();
}

void Poly1::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly1 Poly1::derivative() const {
    if (c_.size() <= 1) return Poly1();
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly1(std::move(d));
}

Poly1& Poly1::operator+=(const Poly1& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly1& Poly1::operator*=(const Int& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return Poly1(std::move(r));
}

}  // namespace hermsq
