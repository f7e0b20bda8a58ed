#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "hermsq/asymptotics.hpp"
#include "hermsq/closed_forms.hpp"
#include "hermsq/determinant.hpp"
#include "hermsq/moments.hpp"
#include "hermsq/pk.hpp"

namespace hermsq::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kMaxPkDegree = 12;

void parallel_for(int jobs, std::size_t n, const std::function<void(std::size_t)>& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    const int width = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
    for (int t = 0; t < width; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::scoped_lock lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::string indices_str(std::span<const int> idx) {
    std::ostringstream os;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ' ';
        os << idx[i];
    }
    return os.str();
}

ordered_json base_config(const RunConfig& cfg) {
    ordered_json j;
    j["format"] = cfg.format;
    j["jobs"] = cfg.jobs;
    j["seed"] = cfg.seed;
    return j;
}

ordered_json approx_of(const hermsq::Rat& v) {
    const double d = v.to_double();
    if (std::isfinite(d)) return d;
    return nullptr;
}

// One named verification block: `cases` independent checks, failure
// messages capped to keep reports readable.
struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failed = 0;
    std::vector<std::string> messages;
};

CheckResult run_cases(const std::string& name, std::size_t n, int jobs,
                      const std::function<std::optional<std::string>(std::size_t)>& fn) {
    std::vector<std::string> msgs(n);
    std::vector<std::uint8_t> bad(n, 0);
    parallel_for(jobs, n, [&](std::size_t i) {
        if (auto m = fn(i)) {
            bad[i] = 1;
            msgs[i] = std::move(*m);
        }
    });
    CheckResult r;
    r.name = name;
    r.cases = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (!bad[i]) continue;
        ++r.failed;
        if (r.messages.size() < 5) r.messages.push_back(msgs[i]);
    }
    return r;
}

void append_check(Report& rep, const CheckResult& c) {
    ordered_json row;
    row["check"] = c.name;
    row["cases"] = c.cases;
    row["failed"] = c.failed;
    row["status"] = c.failed == 0 ? "pass" : "fail";
    rep.rows.push_back(std::move(row));
    for (const auto& m : c.messages) rep.failures.push_back(c.name + ": " + m);
    if (c.failed > c.messages.size()) {
        rep.failures.push_back(c.name + ": " + std::to_string(c.failed - c.messages.size()) +
                               " further failures suppressed");
    }
}

std::vector<std::array<int, 3>> even_triples(int max_index) {
    std::vector<std::array<int, 3>> v;
    for (int a = 0; a <= max_index; ++a) {
        for (int b = 0; b <= max_index; ++b) {
            for (int c = (a + b) % 2; c <= max_index; c += 2) v.push_back({a, b, c});
        }
    }
    return v;
}

std::vector<std::array<int, 4>> even_quads(int max_index) {
    std::vector<std::array<int, 4>> v;
    for (int a = 0; a <= max_index; ++a) {
        for (int b = 0; b <= max_index; ++b) {
            for (int c = 0; c <= max_index; ++c) {
                for (int d = (a + b + c) % 2; d <= max_index; d += 2) v.push_back({a, b, c, d});
            }
        }
    }
    return v;
}

std::string mismatch_msg(std::span<const int> idx, const Rat& got, const Rat& want) {
    return "(" + indices_str(idx) + ") -> " + got.str() + ", oracle " + want.str();
}

void suite_claim1(const RunConfig& cfg, Report& rep) {
    const int N = cfg.max_index;

    append_check(rep, run_cases("closed_h1 vs oracle", static_cast<std::size_t>(N) + 1, cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const int n = static_cast<int>(i);
                                    const std::vector<int> idx{n};
                                    const Rat want = oracle_h(idx);
                                    const Rat got = closed_h1(n);
                                    if (got == want) return std::nullopt;
                                    return mismatch_msg(idx, got, want);
                                }));

    const std::size_t pairs = static_cast<std::size_t>(N + 1) * (N + 1);
    append_check(rep, run_cases("closed_h2 vs oracle (corrected sign)", pairs, cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const int n = static_cast<int>(i) / (N + 1);
                                    const int m = static_cast<int>(i) % (N + 1);
                                    const std::vector<int> idx{n, m};
                                    const Rat want = oracle_h(idx);
                                    const Rat got = closed_h2(n, m);
                                    if (got == want) return std::nullopt;
                                    return mismatch_msg(idx, got, want);
                                }));

    const auto triples = even_triples(N);
    append_check(rep, run_cases("closed_h3 vs oracle", triples.size(), cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const auto& t = triples[i];
                                    const std::vector<int> idx{t[0], t[1], t[2]};
                                    const Rat want = oracle_h(idx);
                                    const Rat got = closed_h3(t[0], t[1], t[2]);
                                    if (got == want) return std::nullopt;
                                    return mismatch_msg(idx, got, want);
                                }));

    append_check(rep, run_cases("family embedding h(n,0) chains", pairs, cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const int n = static_cast<int>(i) / (N + 1);
                                    const int m = static_cast<int>(i) % (N + 1);
                                    if (closed_h2(n, 0) != closed_h1(n)) return "h2(n,0) != h1(n) at n=" + std::to_string(n);
                                    if (closed_h3(n, m, 0) != closed_h2(n, m)) {
                                        return "h3(n,m,0) != h2(n,m) at (" + std::to_string(n) + "," + std::to_string(m) + ")";
                                    }
                                    return std::nullopt;
                                }));

    // Documented discrepancy: the printed two-factor sign (-1)^{(n+m)/2}
    // disagrees with direct integration whenever m is odd.
    std::size_t diverging = 0, total = 0;
    std::string witness;
    for (int n = 0; n <= N; ++n) {
        for (int m = n % 2; m <= N; m += 2) {
            ++total;
            if (closed_h2(n, m, H2Sign::printed) != closed_h2(n, m)) {
                ++diverging;
                if (witness.empty()) {
                    witness = "(" + std::to_string(n) + "," + std::to_string(m) + "): oracle " +
                              closed_h2(n, m).str() + ", printed " +
                              closed_h2(n, m, H2Sign::printed).str();
                }
            }
        }
    }
    rep.warnings.push_back("printed two-factor sign diverges on " + std::to_string(diverging) +
                           " of " + std::to_string(total) + " even-sum pairs up to " +
                           std::to_string(N) + "; first witness " + witness);
}

void suite_claim2(const RunConfig& cfg, Report& rep) {
    const int N = cfg.max_index;
    const int K = std::min(cfg.k, kMaxPkDegree);
    PkTable pks;
    const PkEval pk = pks.evaluator();

    for (int k = 0; k <= K; ++k) {
        pks.get(k);  // interpolate once, outside the parallel region
        std::vector<std::array<int, 3>> pts;
        for (int a = 0; a <= N; ++a) {
            for (int b = 0; b <= N; ++b) {
                for (int c = (a + b + k) % 2; c <= N; c += 2) pts.push_back({a, b, c});
            }
        }
        append_check(rep, run_cases("factored closed form k=" + std::to_string(k), pts.size(),
                                    cfg.jobs, [&](std::size_t i) -> std::optional<std::string> {
                                        const auto& t = pts[i];
                                        const std::vector<int> idx{t[0], t[1], t[2], k};
                                        const Rat want = oracle_h(idx);
                                        const Rat got = closed_h4(QuadIndex{t[0], t[1], t[2], k}, pk);
                                        if (got == want) return std::nullopt;
                                        return mismatch_msg(idx, got, want);
                                    }));
    }

    const int fixture_max = std::min(K, 5);
    append_check(rep, run_cases("interpolant matches reference expansion",
                                static_cast<std::size_t>(fixture_max) + 1, cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const int k = static_cast<int>(i);
                                    if (pks.get(k) == reference_pk(k)) return std::nullopt;
                                    return "P_" + std::to_string(k) + " differs from the reference expansion";
                                }));
}

void suite_recursion(const RunConfig& cfg, Report& rep) {
    const int N = cfg.max_index;
    const int K = std::min(cfg.k, kMaxPkDegree);

    const auto quads = even_quads(N);
    append_check(rep, run_cases("index recurrence vs oracle", quads.size(), cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const auto& q = quads[i];
                                    const std::vector<int> idx(q.begin(), q.end());
                                    const Rat want = oracle_h(idx);
                                    const Rat got = recurrence_h4(QuadIndex{q[0], q[1], q[2], q[3]});
                                    if (got == want) return std::nullopt;
                                    return mismatch_msg(idx, got, want);
                                }));

    // Seeded spot checks that the recurrence cannot see slot order.
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::array<int, 4>> samples;
    for (int s = 0; s < 32; ++s) {
        samples.push_back({static_cast<int>(rng() % (N + 1)), static_cast<int>(rng() % (N + 1)),
                           static_cast<int>(rng() % (N + 1)), static_cast<int>(rng() % (N + 1))});
    }
    append_check(rep, run_cases("index recurrence permutation invariance", samples.size(), cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    std::array<int, 4> q = samples[i];
                                    std::sort(q.begin(), q.end());
                                    const Rat ref = oracle_h(std::vector<int>(q.begin(), q.end()));
                                    do {
                                        if (recurrence_h4(QuadIndex{q[0], q[1], q[2], q[3]}) != ref) {
                                            return "permutation of (" + indices_str(q) + ") diverges";
                                        }
                                    } while (std::next_permutation(q.begin(), q.end()));
                                    return std::nullopt;
                                }));

    PkTable pks;
    const int M = std::min(N, 10);
    for (int k = 0; k <= K; ++k) pks.get(k);
    const std::size_t cube = static_cast<std::size_t>(M + 1) * (M + 1) * (M + 1);
    for (int k = 0; k <= K; ++k) {
        append_check(rep, run_cases("P value recurrence vs interpolant k=" + std::to_string(k),
                                    cube, cfg.jobs, [&](std::size_t i) -> std::optional<std::string> {
                                        const long a = static_cast<long>(i) / ((M + 1) * (M + 1));
                                        const long b = (static_cast<long>(i) / (M + 1)) % (M + 1);
                                        const long c = static_cast<long>(i) % (M + 1);
                                        if (pks.eval(k, a, b, c) == pk_value_via_recurrence(k, a, b, c)) {
                                            return std::nullopt;
                                        }
                                        return "P_" + std::to_string(k) + " paths disagree at (" +
                                               std::to_string(a) + "," + std::to_string(b) + "," +
                                               std::to_string(c) + ")";
                                    }));
    }

    std::vector<std::pair<int, int>> kj;
    for (int k = 1; k <= K; ++k) {
        for (int j = 0; j < k; ++j) kj.emplace_back(k, j);
    }
    append_check(rep, run_cases("substitution recursion identity", kj.size(), cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const auto [k, j] = kj[i];
                                    if (pk_recursion_check(k, j, pks.get(k), pks.get(j))) return std::nullopt;
                                    return "identity fails at k=" + std::to_string(k) + " j=" + std::to_string(j);
                                }));
}

void suite_identities(const RunConfig& cfg, Report& rep) {
    const int N = cfg.max_index;
    const int K = std::min(cfg.k, kMaxPkDegree);

    const auto quads = even_quads(N);
    std::atomic<std::size_t> negative{0};
    append_check(rep, run_cases("six-fold product parity sign", quads.size(), cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const auto& q = quads[i];
                                    const int half = (q[0] + q[1] + q[2] + q[3]) / 2;
                                    const Rat expect(half % 2 == 0 ? 1 : -1);
                                    if (half % 2 != 0) negative.fetch_add(1);
                                    const Rat got = triviality_product(q[0], q[1], q[2], q[3]);
                                    if (got == expect) return std::nullopt;
                                    return "(" + indices_str(q) + ") -> " + got.str();
                                }));
    rep.warnings.push_back(
        "printed six-fold double-factorial identity claims 1; the product equals "
        "(-1)^{(n+m+l+k)/2}, which is -1 on " +
        std::to_string(negative.load()) + " of " + std::to_string(quads.size()) +
        " even-sum tuples up to " + std::to_string(N) + " (witness (0,0,0,2) -> -1)");

    const int M = std::min(N, 10);
    const auto small_quads = even_quads(M);
    PkTable pks;
    for (int k = 0; k <= M; ++k) pks.get(k);

    std::atomic<std::size_t> printed_fail{0};
    append_check(rep, run_cases("squared-value identity (+1 sign)", small_quads.size(), cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const auto& q = small_quads[i];
                                    const auto res = hsq_identity_check(
                                        QuadIndex{q[0], q[1], q[2], q[3]}, pks);
                                    if (!res.holds_printed) printed_fail.fetch_add(1);
                                    if (res.holds_plus) return std::nullopt;
                                    return "fails at (" + indices_str(q) + ")";
                                }));
    rep.warnings.push_back("printed squared-value sign factor (-1)^{(k+l+m+n)/2} fails on " +
                           std::to_string(printed_fail.load()) + " of " +
                           std::to_string(small_quads.size()) + " even-sum tuples up to " +
                           std::to_string(M) + "; the identity holds with overall sign +1");

    append_check(rep, run_cases("fourth-power identity", small_quads.size(), cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const auto& q = small_quads[i];
                                    if (h4_identity_check(QuadIndex{q[0], q[1], q[2], q[3]}, pks)) {
                                        return std::nullopt;
                                    }
                                    return "fails at (" + indices_str(q) + ")";
                                }));

    std::vector<std::pair<int, int>> kl;
    for (int k = 1; k <= K; ++k) {
        for (int l = 0; l < k; ++l) kl.emplace_back(k, l);
    }
    append_check(rep, run_cases("cross-multiplied ratio identity", kl.size(), cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const auto [k, l] = kl[i];
                                    if (ratio_identity_check(k, l, pks, 2 * K + 4)) return std::nullopt;
                                    return "fails at k=" + std::to_string(k) + " l=" + std::to_string(l);
                                }));
}

}  // namespace

Report cmd_hvalue(const RunConfig& cfg) {
    const auto& idx = cfg.indices;
    if (idx.empty() || idx.size() > 4) throw UsageError("hvalue: provide 1 to 4 indices");
    for (int i : idx) {
        if (i < 0) throw UsageError("hvalue: indices must be non-negative");
    }
    const int total = std::accumulate(idx.begin(), idx.end(), 0);

    Rat value;
    if (cfg.method == "oracle") {
        value = oracle_h(idx);
    } else if (cfg.method == "recurrence") {
        value = recurrence_h4(idx);
    } else if (cfg.method == "closed") {
        switch (idx.size()) {
            case 1:
                value = closed_h1(idx[0]);
                break;
            case 2:
                value = closed_h2(idx[0], idx[1]);
                break;
            case 3:
                value = closed_h3(idx[0], idx[1], idx[2]);
                break;
            default: {
                if (idx[3] > kMaxPkDegree) {
                    throw UsageError("hvalue closed: the fourth index selects P_k; supported up to k=" +
                                     std::to_string(kMaxPkDegree) + " (use --method recurrence instead)");
                }
                PkTable pks;
                value = closed_h4(QuadIndex{idx[0], idx[1], idx[2], idx[3]}, pks.evaluator());
            }
        }
    } else if (cfg.method == "gf") {
        if (total > cfg.order) {
            throw UsageError("hvalue gf: total index degree " + std::to_string(total) +
                             " exceeds --order " + std::to_string(cfg.order));
        }
        value = gf_coefficient_h(idx, gf_rhs(static_cast<int>(idx.size()), cfg.order));
    } else {
        throw UsageError("hvalue: unknown method '" + cfg.method + "'");
    }

    Report rep;
    rep.command = "hvalue";
    rep.config = base_config(cfg);
    rep.config["indices"] = idx;
    rep.config["method"] = cfg.method;
    rep.config["check"] = cfg.check;
    if (cfg.method == "gf") rep.config["order"] = cfg.order;

    ordered_json row;
    row["indices"] = indices_str(idx);
    row["method"] = cfg.method;
    row["value"] = value.str();
    row["approx"] = approx_of(value);
    if (cfg.check) {
        const Rat want = oracle_h(idx);
        row["check"] = (value == want) ? "agree" : "disagree";
        if (value != want) {
            rep.failures.push_back("hvalue: method " + cfg.method + " gives " + value.str() +
                                   ", oracle " + want.str());
        }
    }
    rep.rows.push_back(std::move(row));
    return rep;
}

std::string pk_canonical_text(int k) { return pk_interpolate(k).canonical_str(); }

Report cmd_pk(const RunConfig& cfg) {
    if (cfg.k < 0) throw UsageError("pk: k must be non-negative");
    if (cfg.k > kMaxPkDegree) {
        throw UsageError("pk: degrees beyond k=" + std::to_string(kMaxPkDegree) + " are not tabulated");
    }
    if (cfg.compare_paper && cfg.k > 5) {
        throw UsageError("pk --compare-paper: reference expansions exist for k <= 5 only");
    }

    const SymPoly3 p = pk_interpolate(cfg.k);

    Report rep;
    rep.command = "pk";
    rep.config = base_config(cfg);
    rep.config["k"] = cfg.k;
    rep.config["compare_paper"] = cfg.compare_paper;

    std::vector<std::pair<Expo3, Rat>> items(p.terms().begin(), p.terms().end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        const int da = a.first[0] + a.first[1] + a.first[2];
        const int db = b.first[0] + b.first[1] + b.first[2];
        if (da != db) return da > db;
        return a.first > b.first;
    });
    for (const auto& [e, c] : items) {
        ordered_json row;
        row["a"] = e[0];
        row["b"] = e[1];
        row["c"] = e[2];
        row["coeff"] = c.str();
        rep.rows.push_back(std::move(row));
    }

    if (cfg.compare_paper) {
        const SymPoly3 ref = reference_pk(cfg.k);
        if (p == ref) {
            rep.warnings.push_back("P_" + std::to_string(cfg.k) +
                                   " matches the reference expansion exactly");
        } else {
            const SymPoly3 diff = p - ref;
            rep.failures.push_back("P_" + std::to_string(cfg.k) +
                                   " differs from the reference expansion; difference has " +
                                   std::to_string(diff.terms().size()) + " monomials");
        }
    }
    return rep;
}

Report cmd_verify(const RunConfig& cfg) {
    Report rep;
    rep.command = "verify";
    rep.config = base_config(cfg);
    rep.config["suite"] = cfg.suite;
    rep.config["max_index"] = cfg.max_index;
    rep.config["k"] = cfg.k;

    if (cfg.max_index < 0) throw UsageError("verify: --max-index must be non-negative");
    if (cfg.max_index > 20) {
        throw UsageError("verify: --max-index above 20 is outside the documented budget");
    }
    const bool all = cfg.suite == "all";
    if (!all && cfg.suite != "claim1" && cfg.suite != "claim2" && cfg.suite != "recursion" &&
        cfg.suite != "identities") {
        throw UsageError("verify: unknown suite '" + cfg.suite + "'");
    }

    if (all || cfg.suite == "claim1") suite_claim1(cfg, rep);
    if (all || cfg.suite == "claim2") suite_claim2(cfg, rep);
    if (all || cfg.suite == "recursion") suite_recursion(cfg, rep);
    if (all || cfg.suite == "identities") suite_identities(cfg, rep);
    return rep;
}

Report cmd_gfcheck(const RunConfig& cfg) {
    if (cfg.order < 0) throw UsageError("gfcheck: --order must be non-negative");
    if (cfg.order > 16) throw UsageError("gfcheck: --order above 16 is outside the documented budget");

    Report rep;
    rep.command = "gfcheck";
    rep.config = base_config(cfg);
    rep.config["order"] = cfg.order;
    rep.config["max_index"] = cfg.max_index;

    for (int f = 1; f <= 4; ++f) {
        const SeriesMV series = gf_rhs(f, cfg.order);
        // all tuples of f indices with total degree <= order
        std::vector<std::vector<int>> tuples;
        std::vector<int> idx(static_cast<std::size_t>(f), 0);
        while (true) {
            if (std::accumulate(idx.begin(), idx.end(), 0) <= cfg.order) tuples.push_back(idx);
            int pos = f - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == cfg.order) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
        append_check(rep, run_cases("series coefficients vs oracle, " + std::to_string(f) + " factors",
                                    tuples.size(), cfg.jobs,
                                    [&](std::size_t i) -> std::optional<std::string> {
                                        const auto& t = tuples[i];
                                        const Rat got = gf_coefficient_h(t, series);
                                        const Rat want = oracle_h(t);
                                        if (got == want) return std::nullopt;
                                        return mismatch_msg(t, got, want);
                                    }));
    }

    const int n1 = 2 * cfg.max_index;
    append_check(rep, run_cases("single-series expansion vs closed form",
                                static_cast<std::size_t>(n1) / 2 + 1, cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const int n = 2 * static_cast<int>(i);
                                    const SeriesMV s = gf_rhs(1, n);
                                    const Rat got = gf_coefficient_h(std::vector<int>{n}, s);
                                    if (got == closed_h1(n)) return std::nullopt;
                                    return "diverges at n=" + std::to_string(n);
                                }));

    std::vector<std::array<int, 2>> pairs;
    for (int n = 0; n <= 2 * cfg.max_index; ++n) {
        for (int m = n % 2; m <= 2 * cfg.max_index; m += 2) pairs.push_back({n, m});
    }
    append_check(rep, run_cases("double-series expansion vs closed form", pairs.size(), cfg.jobs,
                                [&](std::size_t i) -> std::optional<std::string> {
                                    const auto [n, m] = pairs[i];
                                    if (expanded_coeff_h2(n, m) == closed_h2(n, m)) return std::nullopt;
                                    return "diverges at (" + std::to_string(n) + "," + std::to_string(m) + ")";
                                }));
    return rep;
}

Report cmd_dn(const RunConfig& cfg) {
    if (cfg.size < 1) throw UsageError("dn: --size must be >= 1");
    if (cfg.size > 6) throw UsageError("dn: --size above 6 is outside the documented budget");
    if (cfg.max_index < 0) throw UsageError("dn: --max-index must be non-negative");

    Report rep;
    rep.command = "dn";
    rep.config = base_config(cfg);
    rep.config["max_index"] = cfg.max_index;
    rep.config["size"] = cfg.size;
    // the reported values are sqrt(2/pi)-normalized; multiply by
    // sqrt(pi/2) for the raw-weight integral
    rep.config["normalization"] = "sqrt(2/pi)";

    const std::size_t count = static_cast<std::size_t>(cfg.max_index) + 1;
    std::vector<ordered_json> rows(count);
    std::vector<std::string> fails(count);
    parallel_for(cfg.jobs, count, [&](std::size_t i) {
        const DetSpec spec{static_cast<int>(i), cfg.size};
        const Rat by_perm = dn_by_permutations(spec);
        const Rat by_poly = dn_by_polynomial(spec);
        ordered_json row;
        row["n"] = spec.n;
        row["size"] = spec.r;
        row["value"] = by_perm.str();
        row["approx"] = approx_of(by_perm);
        row["ln_abs"] = by_perm.is_zero() ? ordered_json(nullptr) : ordered_json(log_magnitude(by_perm));
        row["routes_agree"] = (by_perm == by_poly);
        if (by_perm != by_poly) {
            fails[i] = "dn routes disagree at n=" + std::to_string(spec.n) + ": permutations " +
                       by_perm.str() + ", polynomial " + by_poly.str();
        }
        rows[i] = std::move(row);
    });
    for (std::size_t i = 0; i < count; ++i) {
        rep.rows.push_back(std::move(rows[i]));
        if (!fails[i].empty()) rep.failures.push_back(fails[i]);
    }
    return rep;
}

Report cmd_asym(const RunConfig& cfg) {
    std::vector<std::string> quantities = cfg.quantities;
    if (quantities.empty()) {
        for (auto q : asym_catalogue()) quantities.emplace_back(q);
    }
    std::vector<int> ns = cfg.n_values;
    if (ns.empty()) ns = {8, 16, 32, 64, 128, 256};

    Report rep;
    rep.command = "asym";
    rep.config = base_config(cfg);
    rep.config["quantities"] = quantities;
    rep.config["n_values"] = ns;

    for (const auto& q : quantities) {
        std::vector<AsymRow> rows;
        try {
            rows = asym_table(q, ns);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        for (const auto& r : rows) {
            ordered_json row;
            row["quantity"] = r.quantity;
            row["n"] = r.n;
            row["exact"] = r.exact.str();
            row["approx"] = approx_of(r.exact);
            row["predicted"] = r.predicted;
            row["abs_error"] = r.abs_error;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

Report cmd_table(const RunConfig& cfg) {
    if (cfg.max_index < 0) throw UsageError("table: --max-index must be non-negative");
    if (cfg.max_index > 24) throw UsageError("table: --max-index above 24 is outside the documented budget");

    Report rep;
    rep.command = "table";
    rep.config = base_config(cfg);
    rep.config["max_index"] = cfg.max_index;
    rep.config["check"] = cfg.check;

    // non-decreasing even-sum tuples per family; the value path is the
    // closed form for 1-3 factors and the recurrence for 4
    std::vector<std::vector<int>> work;
    const int N = cfg.max_index;
    for (int a = 0; a <= N; a += 2) work.push_back({a});
    for (int a = 0; a <= N; ++a) {
        for (int b = a; b <= N; ++b) {
            if ((a + b) % 2 == 0) work.push_back({a, b});
        }
    }
    for (int a = 0; a <= N; ++a) {
        for (int b = a; b <= N; ++b) {
            for (int c = b; c <= N; ++c) {
                if ((a + b + c) % 2 == 0) work.push_back({a, b, c});
            }
        }
    }
    for (int a = 0; a <= N; ++a) {
        for (int b = a; b <= N; ++b) {
            for (int c = b; c <= N; ++c) {
                for (int d = c; d <= N; ++d) {
                    if ((a + b + c + d) % 2 == 0) work.push_back({a, b, c, d});
                }
            }
        }
    }
    std::stable_sort(work.begin(), work.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    std::vector<ordered_json> rows(work.size());
    std::vector<std::string> fails(work.size());
    parallel_for(cfg.jobs, work.size(), [&](std::size_t i) {
        const auto& idx = work[i];
        Rat value;
        switch (idx.size()) {
            case 1: value = closed_h1(idx[0]); break;
            case 2: value = closed_h2(idx[0], idx[1]); break;
            case 3: value = closed_h3(idx[0], idx[1], idx[2]); break;
            default: value = recurrence_h4(QuadIndex{idx[0], idx[1], idx[2], idx[3]}); break;
        }
        ordered_json row;
        row["family"] = idx.size();
        row["indices"] = indices_str(idx);
        row["value"] = value.str();
        if (cfg.check) {
            const Rat want = oracle_h(idx);
            row["check"] = (value == want) ? "agree" : "disagree";
            if (value != want) fails[i] = "table: " + mismatch_msg(idx, value, want);
        }
        rows[i] = std::move(row);
    });
    for (std::size_t i = 0; i < work.size(); ++i) {
        rep.rows.push_back(std::move(rows[i]));
        if (!fails[i].empty()) rep.failures.push_back(fails[i]);
    }
    return rep;
}

Report run_command(const RunConfig& cfg) {
    if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "text") {
        throw UsageError("unknown format '" + cfg.format + "'");
    }
    if (cfg.format == "text" && cfg.command != "pk") {
        throw UsageError("--format text is supported by the pk command only");
    }
    if (cfg.jobs < 1) throw UsageError("--jobs must be >= 1");

    if (cfg.command == "hvalue") return cmd_hvalue(cfg);
    if (cfg.command == "pk") return cmd_pk(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "gfcheck") return cmd_gfcheck(cfg);
    if (cfg.command == "dn") return cmd_dn(cfg);
    if (cfg.command == "asym") return cmd_asym(cfg);
    if (cfg.command == "table") return cmd_table(cfg);
    throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace hermsq::cli
