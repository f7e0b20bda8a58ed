#include "hermsq/pk.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>

#include "hermsq/combinatorics.hpp"
#include "hermsq/moments.hpp"

namespace hermsq {

namespace {

// Monomial coefficients of the interpolant through (nodes[i], vals[i]),
// by Newton divided differences. Nodes must be distinct integers.
std::vector<Rat> newton_to_monomial(const std::vector<long>& nodes, std::vector<Rat> vals) {
    const int d = static_cast<int>(nodes.size());
    for (int level = 1; level < d; ++level) {
        for (int i = d - 1; i >= level; --i) {
            vals[i] = (vals[i] - vals[i - 1]) / Rat(nodes[i] - nodes[i - level]);
        }
    }
    std::vector<Rat> result(static_cast<std::size_t>(d), Rat(0));
    std::vector<Rat> basis{Rat(1)};  // prod_{j<i} (x - nodes[j])
    for (int i = 0; i < d; ++i) {
        for (std::size_t p = 0; p < basis.size(); ++p) result[p] += vals[i] * basis[p];
        if (i + 1 < d) {
            const Rat t(nodes[i]);
            basis.push_back(Rat(0));
            for (std::size_t p = basis.size() - 1; p >= 1; --p) {
                basis[p] = basis[p - 1] - t * basis[p];
            }
            basis[0] = -t * basis[0];
        }
    }
    return result;
}

std::uint64_t pack4(long a, long b, long c, long d) {
    return (static_cast<std::uint64_t>(a) << 48) | (static_cast<std::uint64_t>(b) << 32) |
           (static_cast<std::uint64_t>(c) << 16) | static_cast<std::uint64_t>(d);
}

// Orbit representatives (a >= b >= c) of total degree <= max_degree, in
// graded-lexicographic order.
std::vector<Expo3> orbit_reps(int max_degree) {
    std::vector<Expo3> reps;
    for (int deg = 0; deg <= max_degree; ++deg) {
        for (int a = deg; a >= 0; --a) {
            for (int b = std::min(a, deg - a); b >= 0; --b) {
                const int c = deg - a - b;
                if (c >= 0 && c <= b) reps.push_back({a, b, c});
            }
        }
    }
    return reps;
}

// Deterministic expanding-shell enumeration of [0,bound]^2.
std::vector<std::pair<int, int>> spiral_points(int bound) {
    std::vector<std::pair<int, int>> pts;
    for (int d = 0; d <= bound; ++d) {
        for (int n = 0; n <= d; ++n) pts.emplace_back(d, n);
        for (int m = 0; m < d; ++m) pts.emplace_back(m, d);
    }
    return pts;
}

SymPoly3 ansatz_one(int k, const std::vector<SymPoly3>& lower) {
    if (k == 0) return SymPoly3::constant(Rat(1));

    const auto reps = orbit_reps(2 * k);
    std::vector<SymPoly3> basis;
    basis.reserve(reps.size());
    for (const auto& r : reps) basis.push_back(SymPoly3::orbit_sum(r));
    const int nb = static_cast<int>(basis.size());

    // Incremental exact elimination; rows[p] holds the unique pivot row
    // whose leading coefficient sits in column p, normalized to 1.
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(nb));
    int rank = 0;

    for (const auto& [m0, n0] : spiral_points(3 * k)) {
        for (int j = 0; j < k && rank < nb; ++j) {
            std::vector<Rat> row(static_cast<std::size_t>(nb) + 1);
            for (int i = 0; i < nb; ++i) row[i] = basis[i].eval_int(j, m0, n0);
            Rat rhs = lower[static_cast<std::size_t>(j)].eval_int(k, m0, n0);
            for (int t = 0; t < k - j; ++t) {
                const long lin = static_cast<long>(m0) - n0 - k + j + 1 + 2 * t;
                rhs *= Rat(lin * lin);
            }
            row[nb] = rhs;

            for (int p = 0; p < nb; ++p) {
                if (row[p].is_zero() || rows[p].empty()) continue;
                const Rat f = row[p];
                for (int q = p; q <= nb; ++q) row[q] -= f * rows[p][q];
            }
            int pivot = -1;
            for (int p = 0; p < nb; ++p) {
                if (!row[p].is_zero()) {
                    pivot = p;
                    break;
                }
            }
            if (pivot < 0) {
                if (!row[nb].is_zero()) throw std::logic_error("pk_ansatz_solve: inconsistent constraints");
                continue;
            }
            const Rat inv = row[pivot];
            for (int q = pivot; q <= nb; ++q) row[q] /= inv;
            rows[static_cast<std::size_t>(pivot)] = std::move(row);
            ++rank;
        }
        if (rank == nb) break;
    }

    if (rank < nb) throw RankDeficiencyError(nb - rank);

    std::vector<Rat> x(static_cast<std::size_t>(nb));
    for (int p = nb - 1; p >= 0; --p) {
        Rat v = rows[p][static_cast<std::size_t>(nb)];
        for (int q = p + 1; q < nb; ++q) v -= rows[p][q] * x[q];
        x[static_cast<std::size_t>(p)] = std::move(v);
    }

    SymPoly3 result;
    for (int i = 0; i < nb; ++i) {
        SymPoly3 term = basis[i];
        term *= x[static_cast<std::size_t>(i)];
        result += term;
    }
    return result;
}

}  // namespace

SymPoly3 pk_interpolate(int k) {
    if (k < 0) throw std::domain_error("pk_interpolate: negative degree");
    const int d = 2 * k + 1;

    // Parity-valid tensor grid, 2k+1 nodes per variable, step 2: the first
    // axis takes odd values when k is odd so that n+m+l+k stays even.
    std::vector<long> ax0(static_cast<std::size_t>(d)), ax12(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        ax12[i] = 2L * i;
        ax0[i] = (k % 2 == 0) ? 2L * i : 2L * i + 1;
    }

    const auto at = [d](int i, int j, int l) {
        return (static_cast<std::size_t>(i) * d + j) * d + l;
    };

    std::vector<Rat> f(static_cast<std::size_t>(d) * d * d);
    const int ksign = (k % 2 == 0) ? 1 : -1;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int l = 0; l < d; ++l) {
                const long n = ax0[i], m = ax12[j], ll = ax12[l];
                const Rat h = recurrence_h4(QuadIndex{static_cast<int>(n), static_cast<int>(m),
                                                      static_cast<int>(ll), k});
                const Rat pre = double_factorial(n + m - ll - k - 1) *
                                double_factorial(n - m + ll - k - 1) *
                                double_factorial(-n + m + ll - k - 1);
                f[at(i, j, l)] = Rat(ksign) * h / pre;
            }
        }
    }

    // One Newton pass per axis turns grid values into monomial coefficients.
    std::vector<Rat> line(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        for (int l = 0; l < d; ++l) {
            for (int i = 0; i < d; ++i) line[i] = f[at(i, j, l)];
            auto mono = newton_to_monomial(ax0, line);
            for (int i = 0; i < d; ++i) f[at(i, j, l)] = mono[i];
        }
    }
    for (int i = 0; i < d; ++i) {
        for (int l = 0; l < d; ++l) {
            for (int j = 0; j < d; ++j) line[j] = f[at(i, j, l)];
            auto mono = newton_to_monomial(ax12, line);
            for (int j = 0; j < d; ++j) f[at(i, j, l)] = mono[j];
        }
    }
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int l = 0; l < d; ++l) line[l] = f[at(i, j, l)];
            auto mono = newton_to_monomial(ax12, line);
            for (int l = 0; l < d; ++l) f[at(i, j, l)] = mono[l];
        }
    }

    SymPoly3 p;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int l = 0; l < d; ++l) p.add_term({i, j, l}, f[at(i, j, l)]);
        }
    }
    return p;
}

Rat pk_value_via_recurrence(int n, long m, long l, long j) {
    if (n < 0 || m < 0 || l < 0 || j < 0) {
        throw std::domain_error("pk_value_via_recurrence: negative argument");
    }
    if (n > 0xFFFF || m > 0xFFFF || l > 0xFFFF || j > 0xFFFF) {
        throw std::invalid_argument("pk_value_via_recurrence: argument exceeds key width");
    }
    if (n == 0) return Rat(1);

    static std::mutex mu;
    static std::unordered_map<std::uint64_t, Rat> memo;

    const std::uint64_t key = pack4(n, m, l, j);
    {
        std::scoped_lock lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    const long a = m + l - j - n + 1;
    const long b = m - l + j - n + 1;
    const long c = -m + l + j - n + 1;

    Rat v(0);
    if (n >= 2) v += Rat(-(n - 1) * a * b * c) * pk_value_via_recurrence(n - 2, m, l, j);
    if (m >= 1) v += Rat(-m * c) * pk_value_via_recurrence(n - 1, m - 1, l, j);
    if (l >= 1) v += Rat(-l * b) * pk_value_via_recurrence(n - 1, m, l - 1, j);
    if (j >= 1) v += Rat(-j * a) * pk_value_via_recurrence(n - 1, m, l, j - 1);

    std::scoped_lock lock(mu);
    memo.try_emplace(key, v);
    return v;
}

RankDeficiencyError::RankDeficiencyError(int nullity_)
    : std::runtime_error("pk_ansatz_solve: rank-deficient system, null space dimension " +
                         std::to_string(nullity_)),
      nullity(nullity_) {}

SymPoly3 pk_ansatz_solve(int k) {
    if (k < 0) throw std::domain_error("pk_ansatz_solve: negative degree");
    std::vector<SymPoly3> solved;
    solved.push_back(SymPoly3::constant(Rat(1)));
    for (int kk = 1; kk <= k; ++kk) solved.push_back(ansatz_one(kk, solved));
    return solved[static_cast<std::size_t>(k)];
}

bool pk_recursion_check(int k, int j, const SymPoly3& p_k, const SymPoly3& p_j) {
    if (j < 0 || j >= k) throw std::invalid_argument("pk_recursion_check: need 0 <= j < k");
    const SymPoly3 lhs = p_k.substitute(0, j);
    SymPoly3 rhs = p_j.substitute(0, k);
    for (int t = 0; t < k - j; ++t) {
        const long c = static_cast<long>(j) - k + 1 + 2 * t;
        SymPoly3 lin = SymPoly3::monomial({0, 1, 0}, Rat(1));
        lin += SymPoly3::monomial({0, 0, 1}, Rat(-1));
        lin += SymPoly3::constant(Rat(c));
        rhs = rhs * (lin * lin);
    }
    return lhs == rhs;
}

Rat triviality_product(int n, int m, int l, int k) {
    if (n < 0 || m < 0 || l < 0 || k < 0) {
        throw std::domain_error("triviality_product: negative index");
    }
    if (((n + m + l + k) & 1) != 0) {
        throw std::domain_error("triviality_product: odd index sum");
    }
    const long N = n, M = m, L = l, K = k;
    return double_factorial(L + M - N - K - 1) * double_factorial(L - M + N - K - 1) *
           double_factorial(-L + M + N - K - 1) * double_factorial(-L + M - N + K - 1) *
           double_factorial(-L - M + N + K - 1) * double_factorial(L - M - N + K - 1);
}

const SymPoly3& PkTable::get(int k) {
    if (k < 0) throw std::domain_error("PkTable: negative degree");
    if (max_k_ >= 0 && k > max_k_) {
        throw std::out_of_range("PkTable: degree " + std::to_string(k) +
                                " beyond configured maximum " + std::to_string(max_k_));
    }
    std::scoped_lock lock(mu_);
    if (static_cast<int>(by_k_.size()) <= k) by_k_.resize(static_cast<std::size_t>(k) + 1);
    auto& slot = by_k_[static_cast<std::size_t>(k)];
    if (!slot) slot = std::make_unique<const SymPoly3>(pk_interpolate(k));
    return *slot;
}

Rat PkTable::eval(int k, long n, long m, long l) { return get(k).eval_int(n, m, l); }

PkEval PkTable::evaluator() {
    return [this](int k, long n, long m, long l) { return eval(k, n, m, l); };
}

HsqCheck hsq_identity_check(const QuadIndex& q, PkTable& pks) {
    if (!q.even_sum()) throw std::domain_error("hsq_identity_check: odd index sum");
    // Identity roles (k,l,m,n) taken in tuple order.
    const int rk = q.n, rl = q.m, rm = q.l, rn = q.k;
    const std::array<int, 4> idx{rk, rl, rm, rn};
    const Rat h = oracle_h(idx);
    const Rat h2 = h * h;
    const Rat pre = double_factorial(-static_cast<long>(rl) + rm + rn - rk - 1);
    const Rat rhs = pre * pre * pks.eval(rl, rk, rm, rn) * pks.eval(rk, rl, rm, rn);
    HsqCheck r;
    r.holds_plus = (h2 == rhs);
    const long half = (static_cast<long>(rk) + rl + rm + rn) / 2;
    r.holds_printed = (h2 == ((half % 2 == 0) ? rhs : -rhs));
    return r;
}

bool h4_identity_check(const QuadIndex& q, PkTable& pks) {
    if (!q.even_sum()) throw std::domain_error("h4_identity_check: odd index sum");
    const int rk = q.n, rl = q.m, rm = q.l, rn = q.k;
    const std::array<int, 4> idx{rk, rl, rm, rn};
    const Rat h = oracle_h(idx);
    const Rat rhs = pks.eval(rl, rk, rm, rn) * pks.eval(rm, rk, rn, rl) *
                    pks.eval(rn, rk, rm, rl) * pks.eval(rk, rl, rm, rn);
    return h * h * h * h == rhs;
}

bool ratio_identity_check(int k, int l, PkTable& pks, int radius) {
    if (l < 0 || k < l) throw std::invalid_argument("ratio_identity_check: need k >= l >= 0");
    if (k == l) return true;
    const auto valid = [](long a) { return a >= 0 || (a % 2 != 0); };
    for (int m0 = 0; m0 <= radius; ++m0) {
        for (int n0 = 0; n0 <= radius; ++n0) {
            const long a1 = static_cast<long>(m0) - n0 + k - l - 1;
            const long a2 = static_cast<long>(m0) - n0 - k + l - 1;
            if (!valid(a1) || !valid(a2)) continue;
            const Rat d1 = double_factorial(a1);
            const Rat d2 = double_factorial(a2);
            const Rat lhs = pks.eval(k, l, m0, n0) * d2 * d2;
            const Rat rhs = pks.eval(l, k, m0, n0) * d1 * d1;
            if (lhs != rhs) return false;
        }
    }
    return true;
}

SymPoly3 reference_pk(int k) {
    const auto ob = [](int a, int b, int c) { return SymPoly3::orbit_sum({a, b, c}); };
    const auto cns = [](long v) { return SymPoly3::constant(Rat(v)); };
    const SymPoly3 mnl = SymPoly3::monomial({1, 1, 1}, Rat(1));
    const SymPoly3 sq222 = SymPoly3::monomial({2, 2, 2}, Rat(1));
    const SymPoly3 e1 = ob(1, 0, 0);
    const SymPoly3 p1 = ob(2, 0, 0) - ob(1, 1, 0) * Rat(2);

    switch (k) {
        case 0:
            return cns(1);
        case 1:
            return p1;
        case 2: {
            const SymPoly3 q = p1 - cns(1);
            return q * q - mnl * Rat(16);
        }
        case 3:
            return p1.pow(3) - p1.pow(2) * Rat(8) + (mnl * Rat(-48) + cns(16)) * p1 -
                   mnl * Rat(64) * (e1 - cns(3));
        case 4:
            return p1.pow(4) - p1.pow(3) * Rat(20) + (mnl * Rat(-96) + cns(118)) * p1.pow(2) +
                   (mnl * Rat(960) - cns(180)) * p1 - mnl * Rat(256) * ob(3, 0, 0) +
                   mnl * Rat(256) * ob(2, 1, 0) + sq222 * Rat(2304) -
                   mnl * Rat(1536) * ob(1, 1, 0) + mnl * Rat(2304) * e1 - mnl * Rat(3936) +
                   cns(81);
        case 5:
            return p1.pow(5) - mnl * Rat(160) * p1.pow(3) - p1.pow(4) * Rat(40) -
                   mnl * Rat(640) * e1 * p1.pow(2) + p1.pow(3) * Rat(528) +
                   sq222 * Rat(3840) * p1 + mnl * Rat(3200) * p1.pow(2) -
                   mnl * Rat(7680) * ob(3, 1, 0) + mnl * Rat(14336) * ob(3, 0, 0) +
                   mnl * Rat(15360) * ob(2, 2, 0) - p1.pow(2) * Rat(2560) +
                   sq222 * Rat(33280) * e1 - mnl * Rat(26624) * ob(2, 1, 0) -
                   mnl * Rat(17920) * p1 - sq222 * Rat(172032) +
                   mnl * Rat(122880) * ob(1, 1, 0) - mnl * Rat(102400) * e1 + p1 * Rat(4096) +
                   mnl * Rat(122880);
        default:
            throw std::out_of_range("reference_pk: only k <= 5 has a reference expansion");
    }
}

}  // namespace hermsq
