#include "hermsq/determinant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hermsq/hermite.hpp"
#include "hermsq/moments.hpp"
#include "hermsq/polynomial.hpp"

namespace hermsq {

namespace {

void check_spec(const DetSpec& spec) {
    if (spec.n < 0) throw std::domain_error("dn: negative base index");
    if (spec.r < 1) throw std::domain_error("dn: matrix size must be >= 1");
}

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++inversions;
        }
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

// Laplace expansion along the first remaining row.
Poly1 poly_det(const std::vector<std::vector<Poly1>>& m, std::vector<int> cols, int row) {
    if (cols.size() == 1) return m[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[0])];
    Poly1 acc;
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t cj = 0; cj < cols.size(); ++cj) {
            if (cj != ci) rest.push_back(cols[cj]);
        }
        Poly1 minor = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[ci])] *
                      poly_det(m, std::move(rest), row + 1);
        if (ci % 2 == 0) {
            acc += minor;
        } else {
            acc -= minor;
        }
    }
    return acc;
}

}  // namespace

std::vector<DnTerm> dn_terms(const DetSpec& spec) {
    check_spec(spec);
    if (spec.r != 4) {
        throw std::invalid_argument("dn_terms: four-index expansion is defined for r = 4 only");
    }
    std::vector<int> perm{0, 1, 2, 3};
    std::vector<DnTerm> terms;
    do {
        DnTerm t;
        t.sign = permutation_sign(perm);
        for (int i = 0; i < 4; ++i) t.indices[static_cast<std::size_t>(i)] = spec.n + i + perm[static_cast<std::size_t>(i)];
        terms.push_back(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return terms;
}

Rat dn_by_permutations(const DetSpec& spec) {
    check_spec(spec);
    std::vector<int> perm(static_cast<std::size_t>(spec.r));
    std::iota(perm.begin(), perm.end(), 0);
    Rat acc(0);
    std::vector<int> indices(static_cast<std::size_t>(spec.r));
    do {
        for (int i = 0; i < spec.r; ++i) indices[static_cast<std::size_t>(i)] = spec.n + i + perm[static_cast<std::size_t>(i)];
        acc += Rat(permutation_sign(perm)) * oracle_h(indices);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

Rat dn_by_polynomial(const DetSpec& spec) {
    check_spec(spec);
    const std::size_t r = static_cast<std::size_t>(spec.r);
    std::vector<std::vector<Poly1>> m(r, std::vector<Poly1>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            m[i][j] = hermite(spec.n + static_cast<int>(i + j));
        }
    }
    std::vector<int> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    return integrate_poly(poly_det(m, std::move(cols), 0));
}

Rat dn_normalized(const DetSpec& spec) {
    const Rat by_perm = dn_by_permutations(spec);
    const Rat by_poly = dn_by_polynomial(spec);
    if (by_perm != by_poly) {
        throw std::logic_error("dn_normalized: evaluation routes disagree at n=" +
                               std::to_string(spec.n) + " r=" + std::to_string(spec.r));
    }
    return by_perm;
}

}  // namespace hermsq
