#include "hermsq/series.hpp"

#include <stdexcept>

namespace hermsq {

SeriesMV::SeriesMV(int num_vars, int order) : nv_(num_vars), order_(order) {
    if (num_vars < 1 || num_vars > 4) throw std::invalid_argument("SeriesMV: 1..4 variables");
    if (order < 0) throw std::invalid_argument("SeriesMV: negative order");
}

Rat SeriesMV::coefficient(const Expo& e) const {
    if (total_degree(e) > order_) {
        throw std::out_of_range("SeriesMV: exponent beyond truncation order");
    }
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

void SeriesMV::add_term(const Expo& e, const Rat& c) {
    if (total_degree(e) > order_ || c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

SeriesMV& SeriesMV::operator+=(const SeriesMV& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

SeriesMV& SeriesMV::scale(const Rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [e, c] : c_) c *= s;
    return *this;
}

SeriesMV operator*(const SeriesMV& a, const SeriesMV& b) {
    SeriesMV r(a.nv_, a.order_);
    for (const auto& [ea, ca] : a.c_) {
        const int da = SeriesMV::total_degree(ea);
        for (const auto& [eb, cb] : b.c_) {
            if (da + SeriesMV::total_degree(eb) > r.order_) continue;
            Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

SeriesMV SeriesMV::exp_of(const SeriesMV& q) {
    if (q.c_.contains(Expo{0, 0, 0, 0})) {
        throw std::invalid_argument("SeriesMV::exp_of: nonzero constant term");
    }
    SeriesMV acc(q.nv_, q.order_);
    acc.add_term(Expo{0, 0, 0, 0}, Rat(1));
    SeriesMV power = acc;  // q^0
    Int fact(1);
    for (int i = 1; i <= q.order_; ++i) {
        power = power * q;
        if (power.is_zero()) break;
        fact *= i;
        SeriesMV term = power;
        term.scale(Rat(Int(1), fact));
        acc += term;
    }
    return acc;
}

}  // namespace hermsq
