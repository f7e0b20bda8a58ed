#include "hermsq/closed_forms.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "hermsq/combinatorics.hpp"

namespace hermsq {

namespace {

int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

std::uint64_t pack_key(const std::array<int, 4>& s) {
    std::uint64_t key = 0;
    for (int v : s) key = (key << 16) | static_cast<std::uint64_t>(v);
    return key;
}

Rat recurrence_sorted(std::array<int, 4> s);

Rat recurrence_child(std::array<int, 4> s) {
    std::sort(s.begin(), s.end(), std::greater<int>());
    return recurrence_sorted(s);
}

// s sorted descending, even index sum, all entries >= 0.
Rat recurrence_sorted(std::array<int, 4> s) {
    static std::mutex mu;
    static std::unordered_map<std::uint64_t, Rat> memo;

    if (s == std::array<int, 4>{0, 0, 0, 0}) return Rat(1);

    const std::uint64_t key = pack_key(s);
    {
        std::scoped_lock lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    const int n = s[0], m = s[1], l = s[2], j = s[3];
    Rat v(0);
    if (n >= 2) v += Rat(-(n - 1)) * recurrence_child({n - 2, m, l, j});
    if (m >= 1) v += Rat(m) * recurrence_child({n - 1, m - 1, l, j});
    if (l >= 1) v += Rat(l) * recurrence_child({n - 1, m, l - 1, j});
    if (j >= 1) v += Rat(j) * recurrence_child({n - 1, m, l, j - 1});

    std::scoped_lock lock(mu);
    memo.try_emplace(key, v);
    return v;
}

}  // namespace

Rat closed_h1(int n) {
    if (n < 0) throw std::domain_error("closed_h1: negative index");
    if (n % 2 != 0) return Rat(0);
    return Rat(sign_pow(n / 2)) * double_factorial(n - 1);
}

Rat closed_h2(int n, int m, H2Sign sign) {
    if (n < 0 || m < 0) throw std::domain_error("closed_h2: negative index");
    if ((n + m) % 2 != 0) return Rat(0);
    const long e = (sign == H2Sign::corrected) ? (static_cast<long>(n) - m) / 2
                                               : (static_cast<long>(n) + m) / 2;
    return Rat(sign_pow(e)) * double_factorial(static_cast<long>(n) + m - 1);
}

Rat closed_h3(int n, int m, int l) {
    if (n < 0 || m < 0 || l < 0) throw std::domain_error("closed_h3: negative index");
    if ((n + m + l) % 2 != 0) return Rat(0);
    const long a = n, b = m, c = l;
    return double_factorial(a + b - c - 1) * double_factorial(a - b + c - 1) *
           double_factorial(-a + b + c - 1);
}

Rat closed_h4(const QuadIndex& q, const PkEval& pk) {
    if (q.n < 0 || q.m < 0 || q.l < 0 || q.k < 0) {
        throw std::domain_error("closed_h4: negative index");
    }
    if (!q.even_sum()) return Rat(0);
    const long n = q.n, m = q.m, l = q.l, k = q.k;
    // With an even index sum all three arguments are odd, so the double
    // factorials are defined and nonzero.
    Rat pre = double_factorial(n + m - l - k - 1) * double_factorial(n - m + l - k - 1) *
              double_factorial(-n + m + l - k - 1);
    return Rat(sign_pow(k)) * pre * pk(q.k, n, m, l);
}

Rat recurrence_h4(const QuadIndex& q) {
    if (q.n < 0 || q.m < 0 || q.l < 0 || q.k < 0) {
        throw std::domain_error("recurrence_h4: negative index");
    }
    if (!q.even_sum()) return Rat(0);
    return recurrence_child(q.to_array());
}

Rat recurrence_h4(std::span<const int> indices) {
    if (indices.size() > 4) throw std::invalid_argument("recurrence_h4: more than 4 indices");
    QuadIndex q;
    int* slot[4] = {&q.n, &q.m, &q.l, &q.k};
    for (std::size_t i = 0; i < indices.size(); ++i) *slot[i] = indices[i];
    return recurrence_h4(q);
}

SeriesMV gf_rhs(int num_factors, int order) {
    SeriesMV q(num_factors, order);
    const Rat minus_half(-1, 2);
    for (int i = 0; i < num_factors; ++i) {
        Expo e{0, 0, 0, 0};
        e[i] = 2;
        q.add_term(e, minus_half);
        for (int j = i + 1; j < num_factors; ++j) {
            Expo c{0, 0, 0, 0};
            c[i] = 1;
            c[j] = 1;
            q.add_term(c, Rat(1));
        }
    }
    return SeriesMV::exp_of(q);
}

Rat gf_coefficient_h(std::span<const int> indices, const SeriesMV& series) {
    if (static_cast<int>(indices.size()) != series.num_vars()) {
        throw std::invalid_argument("gf_coefficient_h: index count != series variables");
    }
    Expo e{0, 0, 0, 0};
    Rat fact(1);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0) throw std::domain_error("gf_coefficient_h: negative index");
        e[i] = indices[i];
        fact *= Rat(factorial(static_cast<unsigned long>(indices[i])));
    }
    return fact * series.coefficient(e);
}

Rat expanded_coeff_h2(int n, int m) {
    if (n < 0 || m < 0) throw std::domain_error("expanded_coeff_h2: negative index");
    if ((n + m) % 2 != 0) throw std::domain_error("expanded_coeff_h2: odd index sum");
    const unsigned long p = static_cast<unsigned long>(n + m);
    Int num = factorial(n) * factorial(m) * binomial(p, static_cast<unsigned long>(n));
    Int den = factorial(p / 2);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), p / 2);
    return Rat(sign_pow((static_cast<long>(m) - n) / 2)) * Rat(num, den);
}

}  // namespace hermsq
