#include "hermsq/moments.hpp"

#include <stdexcept>

#include "hermsq/hermite.hpp"

namespace hermsq {

Rat GaussianMoments::moment(int k) const {
    if (k < 0) throw std::domain_error("moment: negative order");
    if (k % 2 != 0) return Rat(0);
    const std::size_t j = static_cast<std::size_t>(k) / 2;
    std::scoped_lock lock(mu_);
    if (even_.empty()) even_.push_back(Rat(1));
    while (even_.size() <= j) {
        const long jj = static_cast<long>(even_.size());
        even_.push_back(even_.back() * Rat(2 * jj - 1, s_));
    }
    return even_[j];
}

Rat GaussianMoments::integrate(const Poly1& p) const {
    Rat acc(0);
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); i += 2) {
        if (c[i] != 0) acc += Rat(c[i]) * moment(static_cast<int>(i));
    }
    return acc;
}

const GaussianMoments& squared_weight() {
    static const GaussianMoments m(4);
    return m;
}

const GaussianMoments& native_weight() {
    static const GaussianMoments m(2);
    return m;
}

Rat moment(int k) { return squared_weight().moment(k); }

Rat integrate_poly(const Poly1& p) { return squared_weight().integrate(p); }

Rat oracle_h(std::span<const int> indices) {
    return integrate_poly(hermite_product(indices));
}

}  // namespace hermsq
