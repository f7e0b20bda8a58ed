// Acceptance suite: runs the project's ten exit criteria at their stated
// budgets and prints one PASS/FAIL line per criterion. Exit status is 0
// iff every selected criterion passes. Documented sign discrepancies of
// the commonly printed formulas are reported as WARN lines and do not
// affect the status.
//
//   hermsq_acceptance                 run all criteria
//   hermsq_acceptance --criterion N   run one criterion
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hermsq/asymptotics.hpp"
#include "hermsq/closed_forms.hpp"
#include "hermsq/determinant.hpp"
#include "hermsq/moments.hpp"
#include "hermsq/pk.hpp"

using namespace hermsq;

namespace {

struct Outcome {
    bool pass = true;
    std::size_t cases = 0;
    std::vector<std::string> warnings;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        ++cases;
        if (!ok) {
            pass = false;
            if (failures.size() < 5) failures.push_back(what);
        }
    }
};

std::string tuple_str(std::initializer_list<int> idx) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int i : idx) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << ')';
    return os.str();
}

// 1. Closed-form closure: the 1-3 factor closed forms equal the oracle (singles <= 120,
//    pairs <= 60, even-sum triples <= 24), and the printed two-factor
//    sign demonstrably fails at (1,1).
Outcome criterion1() {
    Outcome out;
    for (int n = 0; n <= 120; ++n) {
        out.require(closed_h1(n) == oracle_h(std::vector<int>{n}),
                    "closed_h1 diverges at " + tuple_str({n}));
    }
    for (int n = 0; n <= 60; ++n) {
        for (int m = 0; m <= 60; ++m) {
            out.require(closed_h2(n, m) == oracle_h(std::vector<int>{n, m}),
                        "closed_h2 diverges at " + tuple_str({n, m}));
        }
    }
    for (int n = 0; n <= 24; ++n) {
        for (int m = 0; m <= 24; ++m) {
            for (int l = (n + m) % 2; l <= 24; l += 2) {
                out.require(closed_h3(n, m, l) == oracle_h(std::vector<int>{n, m, l}),
                            "closed_h3 diverges at " + tuple_str({n, m, l}));
            }
        }
    }
    const Rat oracle11 = oracle_h(std::vector<int>{1, 1});
    const Rat printed11 = closed_h2(1, 1, H2Sign::printed);
    out.require(oracle11 == Rat(1) && printed11 == Rat(-1),
                "expected the printed sign to fail at (1,1)");
    out.warnings.push_back("printed two-factor sign fails at (1,1): oracle " + oracle11.str() +
                           ", printed " + printed11.str() + " (corrected exponent (n-m)/2 is used)");
    return out;
}

// 2. Recurrence equivalence with the oracle, exhaustive even-sum
//    quadruples with entries <= 14.
Outcome criterion2() {
    Outcome out;
    for (int a = 0; a <= 14; ++a) {
        for (int b = 0; b <= 14; ++b) {
            for (int c = 0; c <= 14; ++c) {
                for (int d = (a + b + c) % 2; d <= 14; d += 2) {
                    out.require(recurrence_h4(QuadIndex{a, b, c, d}) ==
                                    oracle_h(std::vector<int>{a, b, c, d}),
                                "recurrence diverges at " + tuple_str({a, b, c, d}));
                }
            }
        }
    }
    return out;
}

// 3. Factored-form closure: the four-index form with interpolated P_k equals the
//    oracle for k <= 6, n,m,l <= 12, even sums.
Outcome criterion3() {
    Outcome out;
    PkTable pks;
    const PkEval pk = pks.evaluator();
    for (int k = 0; k <= 6; ++k) {
        for (int n = 0; n <= 12; ++n) {
            for (int m = 0; m <= 12; ++m) {
                for (int l = (n + m + k) % 2; l <= 12; l += 2) {
                    out.require(closed_h4(QuadIndex{n, m, l, k}, pk) ==
                                    oracle_h(std::vector<int>{n, m, l, k}),
                                "factored form diverges at " + tuple_str({n, m, l, k}));
                }
            }
        }
    }
    return out;
}

// 4. Interpolated P_k equals the reference expansions for k <= 5,
//    coefficient by coefficient, including C_1 = -16 and C_2 = 0.
Outcome criterion4() {
    Outcome out;
    for (int k = 0; k <= 5; ++k) {
        out.require(pk_interpolate(k) == reference_pk(k),
                    "P_" + std::to_string(k) + " differs from the reference expansion");
    }
    const SymPoly3 p1 = pk_interpolate(1);
    const SymPoly3 q = p1 - SymPoly3::constant(Rat(1));
    const SymPoly3 rest = pk_interpolate(2) - q * q;
    out.require(rest == SymPoly3::monomial({1, 1, 1}, Rat(-16)),
                "P_2 structure constants are not C_1 = -16, C_2 = 0");
    return out;
}

// 5. The substitution recursion holds as an exact polynomial identity for
//    all 0 <= j < k <= 6.
Outcome criterion5() {
    Outcome out;
    PkTable pks;
    for (int k = 1; k <= 6; ++k) {
        for (int j = 0; j < k; ++j) {
            out.require(pk_recursion_check(k, j, pks.get(k), pks.get(j)),
                        "identity fails at k=" + std::to_string(k) + " j=" + std::to_string(j));
        }
    }
    return out;
}

// 6. Three independent P_k paths agree: interpolation, the ansatz solve
//    (k <= 4), and the value recurrence, at all triples with entries <= 10.
Outcome criterion6() {
    Outcome out;
    for (int k = 0; k <= 6; ++k) {
        const SymPoly3 p = pk_interpolate(k);
        for (long a = 0; a <= 10; ++a) {
            for (long b = 0; b <= 10; ++b) {
                for (long c = 0; c <= 10; ++c) {
                    out.require(p.eval_int(a, b, c) == pk_value_via_recurrence(k, a, b, c),
                                "interpolant and value recurrence disagree for k=" +
                                    std::to_string(k) + " at " +
                                    tuple_str({static_cast<int>(a), static_cast<int>(b),
                                               static_cast<int>(c)}));
                }
            }
        }
        if (k <= 4) {
            out.require(pk_ansatz_solve(k) == p,
                        "ansatz solve differs from interpolation at k=" + std::to_string(k));
        }
    }
    return out;
}

// 7. Generating-series coefficients equal the oracle to total degree 12
//    in all four series; the explicit expansions match their closed forms
//    (single factor to 24, pairs to 40).
Outcome criterion7() {
    Outcome out;
    for (int f = 1; f <= 4; ++f) {
        const SeriesMV series = gf_rhs(f, 12);
        std::vector<int> idx(static_cast<std::size_t>(f), 0);
        while (true) {
            int total = 0;
            for (int v : idx) total += v;
            if (total <= 12) {
                out.require(gf_coefficient_h(idx, series) == oracle_h(idx),
                            "series coefficient diverges, " + std::to_string(f) + " factors");
            }
            int pos = f - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == 12) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }
    const SeriesMV single = gf_rhs(1, 24);
    for (int n = 0; n <= 24; n += 2) {
        out.require(gf_coefficient_h(std::vector<int>{n}, single) == closed_h1(n),
                    "single-series expansion diverges at n=" + std::to_string(n));
    }
    for (int n = 0; n <= 40; ++n) {
        for (int m = n % 2; m <= 40; m += 2) {
            out.require(expanded_coeff_h2(n, m) == closed_h2(n, m),
                        "pair expansion diverges at " + tuple_str({n, m}));
        }
    }
    return out;
}

// 8. Identity suite: six-fold product parity sign (entries <= 12, WARN for
//    the printed form), fourth-power and squared-value identities
//    (entries <= 10), ratio identity sampled for k <= 6.
Outcome criterion8() {
    Outcome out;
    std::size_t negative = 0, total = 0;
    for (int a = 0; a <= 12; ++a) {
        for (int b = 0; b <= 12; ++b) {
            for (int c = 0; c <= 12; ++c) {
                for (int d = (a + b + c) % 2; d <= 12; d += 2) {
                    const int half = (a + b + c + d) / 2;
                    ++total;
                    if (half % 2 != 0) ++negative;
                    out.require(triviality_product(a, b, c, d) == Rat(half % 2 == 0 ? 1 : -1),
                                "six-fold product is not the parity sign at " +
                                    tuple_str({a, b, c, d}));
                }
            }
        }
    }
    out.warnings.push_back(
        "printed six-fold identity claims the product is 1; it equals (-1)^{(n+m+l+k)/2} and is "
        "-1 on " +
        std::to_string(negative) + " of " + std::to_string(total) +
        " even-sum tuples up to 12 (witness (0,0,0,2))");

    PkTable pks;
    std::size_t printed_fails = 0, hsq_total = 0;
    for (int a = 0; a <= 10; ++a) {
        for (int b = 0; b <= 10; ++b) {
            for (int c = 0; c <= 10; ++c) {
                for (int d = (a + b + c) % 2; d <= 10; d += 2) {
                    const QuadIndex q{a, b, c, d};
                    const HsqCheck hsq = hsq_identity_check(q, pks);
                    ++hsq_total;
                    if (!hsq.holds_printed) ++printed_fails;
                    out.require(hsq.holds_plus,
                                "squared-value identity fails at " + tuple_str({a, b, c, d}));
                    out.require(h4_identity_check(q, pks),
                                "fourth-power identity fails at " + tuple_str({a, b, c, d}));
                }
            }
        }
    }
    out.warnings.push_back("printed squared-value sign factor fails on " +
                           std::to_string(printed_fails) + " of " + std::to_string(hsq_total) +
                           " even-sum tuples up to 10; the identity holds with sign +1");

    for (int k = 1; k <= 6; ++k) {
        for (int l = 0; l < k; ++l) {
            out.require(ratio_identity_check(k, l, pks, 13),
                        "ratio identity fails at k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
    }
    return out;
}

// 9. Determinant integrals: the permutation expansion and the direct
//    polynomial route agree for n <= 16 at r = 4; r = 1 reduces to the
//    single-factor closed form; r = 2, n = 0 equals -2.
Outcome criterion9() {
    Outcome out;
    for (int n = 0; n <= 16; ++n) {
        const DetSpec spec{n, 4};
        out.require(dn_by_permutations(spec) == dn_by_polynomial(spec),
                    "dn routes disagree at n=" + std::to_string(n));
    }
    for (int n = 0; n <= 40; ++n) {
        out.require(dn_normalized(DetSpec{n, 1}) == closed_h1(n),
                    "dn(r=1) != closed_h1 at n=" + std::to_string(n));
    }
    out.require(dn_normalized(DetSpec{0, 2}) == Rat(-2), "dn(n=0, r=2) != -2");
    return out;
}

// 10. Asymptotics: the two pair ratios are exact for n <= 60; the scaled
//     growth-law log residuals and the scaled triple-ratio error stay
//     within a factor 2 across n in {64,128,256}.
Outcome criterion10() {
    Outcome out;
    for (int n = 1; n <= 60; ++n) {
        out.require(closed_h2(n, n) / closed_h2(n - 1, n - 1) == Rat(2 * n - 1),
                    "H_nn/H_{n-1,n-1} != 2n-1 at n=" + std::to_string(n));
        out.require(closed_h2(n, n) / closed_h2(n + 1, n - 1) == Rat(-1),
                    "H_nn/H_{n+1,n-1} != -1 at n=" + std::to_string(n));
    }

    const std::vector<int> ns{64, 128, 256};
    const auto factor2 = [&out](const std::string& what, const std::vector<double>& vals) {
        double lo = vals[0], hi = vals[0];
        for (double v : vals) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        out.require(lo > 0.0 && hi <= 2.0 * lo,
                    what + " not bounded within a factor 2: min " + std::to_string(lo) +
                        ", max " + std::to_string(hi));
    };

    const double half_ln2 = 0.5 * std::numbers::ln2;
    std::vector<double> r1, r2, r3;
    for (int n : ns) {
        const double logn = std::log(static_cast<double>(n));
        r1.push_back(n * std::fabs(log_magnitude(closed_h1(n)) - (0.5 * n * (logn - 1) + half_ln2)));
        r2.push_back(n * std::fabs(log_magnitude(closed_h2(n, n)) -
                                   (n * (logn - 1) + n * std::numbers::ln2 + half_ln2)));
        r3.push_back(n * std::fabs(log_magnitude(closed_h3(n, n, n)) -
                                   (1.5 * n * (logn - 1) + 3 * half_ln2)));
    }
    factor2("n * |log residual of H_n|", r1);
    factor2("n * |log residual of H_nn|", r2);
    factor2("n * |log residual of H_nnn|", r3);

    // n^2 |H_nnn/H_{n+1,n-1,n} - (1 - 2/n)|, kept exact
    std::vector<Rat> ratio_err;
    for (int n : ns) {
        const Rat ratio = closed_h3(n, n, n) / closed_h3(n + 1, n - 1, n);
        const Rat target = Rat(1) - Rat(2, n);
        ratio_err.push_back(Rat(static_cast<long>(n) * n) * abs(ratio - target));
    }
    Rat lo = ratio_err[0], hi = ratio_err[0];
    for (const Rat& v : ratio_err) {
        if (v < lo) lo = v;
        if (hi < v) hi = v;
    }
    out.require(lo.sign() > 0 && hi <= Rat(2) * lo,
                "n^2 ratio error not bounded within a factor 2");
    return out;
}

struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
    double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[i + 1]);
            ++i;
        } else {
            std::cerr << "usage: hermsq_acceptance [--criterion N]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "closed forms for 1-3 factors against the oracle", criterion1, 120.0},
        {2, "index recurrence equals the oracle (entries <= 14)", criterion2, 120.0},
        {3, "factored four-index form with interpolated P_k", criterion3, 0.0},
        {4, "P_1..P_5 match the reference expansions", criterion4, 0.0},
        {5, "substitution recursion identity (j < k <= 6)", criterion5, 0.0},
        {6, "three P_k paths agree", criterion6, 0.0},
        {7, "generating series and explicit expansions", criterion7, 0.0},
        {8, "identity suite (parity sign, H^2, H^4, ratio)", criterion8, 0.0},
        {9, "determinant integral routes", criterion9, 0.0},
        {10, "asymptotic ratio and growth laws", criterion10, 600.0},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            out.pass = false;
            out.failures.push_back("exceeded stated budget of " +
                                   std::to_string(c.budget_seconds) + "s");
        }
        std::ostringstream line;
        line << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name << " ("
             << out.cases << " cases, " << std::fixed;
        line.precision(1);
        line << secs << "s)";
        std::cout << line.str() << "\n";
        for (const auto& w : out.warnings) std::cout << "  WARN: " << w << "\n";
        for (const auto& f : out.failures) std::cout << "  FAIL: " << f << "\n";
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
