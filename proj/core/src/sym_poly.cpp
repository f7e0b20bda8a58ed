#include "hermsq/sym_poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace hermsq {

namespace {

Int int_pow(long base, int e) {
    Int r(1);
    Int b(base);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Rat rat_pow(const Rat& base, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

SymPoly3 SymPoly3::constant(Rat c) {
    SymPoly3 p;
    p.add_term({0, 0, 0}, c);
    return p;
}

SymPoly3 SymPoly3::monomial(const Expo3& e, Rat c) {
    SymPoly3 p;
    p.add_term(e, c);
    return p;
}

SymPoly3 SymPoly3::orbit_sum(const Expo3& rep) {
    Expo3 s = rep;
    std::sort(s.begin(), s.end());
    SymPoly3 p;
    do {
        p.c_[s] = Rat(1);
    } while (std::next_permutation(s.begin(), s.end()));
    return p;
}

int SymPoly3::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : c_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

bool SymPoly3::is_symmetric() const {
    for (const auto& [e, c] : c_) {
        Expo3 s = e;
        std::sort(s.begin(), s.end());
        do {
            if (coefficient(s) != c) return false;
        } while (std::next_permutation(s.begin(), s.end()));
    }
    return true;
}

Rat SymPoly3::coefficient(const Expo3& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

Rat SymPoly3::eval(const Rat& x, const Rat& y, const Rat& z) const {
    Rat acc(0);
    for (const auto& [e, c] : c_) {
        acc += c * rat_pow(x, e[0]) * rat_pow(y, e[1]) * rat_pow(z, e[2]);
    }
    return acc;
}

Rat SymPoly3::eval_int(long x, long y, long z) const {
    Rat acc(0);
    for (const auto& [e, c] : c_) {
        acc += c * Rat(int_pow(x, e[0]) * int_pow(y, e[1]) * int_pow(z, e[2]));
    }
    return acc;
}

SymPoly3 SymPoly3::substitute(int slot, long value) const {
    SymPoly3 r;
    for (const auto& [e, c] : c_) {
        Expo3 keep = e;
        keep[static_cast<std::size_t>(slot)] = 0;
        r.add_term(keep, c * Rat(int_pow(value, e[static_cast<std::size_t>(slot)])));
    }
    return r;
}

void SymPoly3::add_term(const Expo3& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

SymPoly3& SymPoly3::operator+=(const SymPoly3& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

SymPoly3& SymPoly3::operator-=(const SymPoly3& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

SymPoly3& SymPoly3::operator*=(const Rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [e, c] : c_) c *= s;
    return *this;
}

SymPoly3 operator*(const SymPoly3& a, const SymPoly3& b) {
    SymPoly3 r;
    for (const auto& [ea, ca] : a.c_) {
        for (const auto& [eb, cb] : b.c_) {
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        }
    }
    return r;
}

SymPoly3 SymPoly3::pow(unsigned e) const {
    SymPoly3 r = constant(Rat(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string SymPoly3::canonical_str() const {
    std::vector<std::pair<Expo3, Rat>> items(c_.begin(), c_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        const int da = a.first[0] + a.first[1] + a.first[2];
        const int db = b.first[0] + b.first[1] + b.first[2];
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    for (const auto& [e, c] : items) {
        os << e[0] << ' ' << e[1] << ' ' << e[2] << " : " << c.str() << '\n';
    }
    return os.str();
}

}  // namespace hermsq
