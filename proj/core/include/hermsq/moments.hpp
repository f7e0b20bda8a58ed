#pragma once

#include <mutex>
#include <span>
#include <vector>

#include "hermsq/polynomial.hpp"

namespace hermsq {

/// Moments of a centered Gaussian weight normalized to unit mass:
/// mu_0 = 1, mu_{2j} = (2j-1)!!/s^j with s the inverse variance, odd
/// moments identically zero. The table grows lazily and is safe for
/// concurrent use.
class GaussianMoments {
public:
    explicit GaussianMoments(int inverse_variance) : s_(inverse_variance) {}

    Rat moment(int k) const;
    Rat integrate(const Poly1& p) const;

private:
    int s_;
    mutable std::mutex mu_;
    mutable std::vector<Rat> even_;  // even_[j] = mu_{2j}
};

/// sqrt(2/pi) e^{-2x^2}: the squared Hermite weight, unit mass (s = 4).
const GaussianMoments& squared_weight();

/// e^{-x^2}/sqrt(pi): the native Hermite weight, unit mass (s = 2).
/// Used only for orthogonality checks.
const GaussianMoments& native_weight();

/// Moments and integrals against the squared weight.
Rat moment(int k);
Rat integrate_poly(const Poly1& p);

/// Brute-force ground truth: expands the Hermite product and integrates
/// monomial by monomial. Every other evaluation path is checked against
/// this one.
Rat oracle_h(std::span<const int> indices);

}  // namespace hermsq
