#include "hermsq/hermite.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace hermsq {

const Poly1& hermite(int n) {
    if (n < 0) throw std::domain_error("hermite: negative index");

    static std::mutex mu;
    static std::vector<std::unique_ptr<const Poly1>> cache;

    std::scoped_lock lock(mu);
    if (cache.empty()) {
        cache.push_back(std::make_unique<const Poly1>(Poly1::constant(Int(1))));
        cache.push_back(std::make_unique<const Poly1>(Poly1::monomial(1, Int(2))));
    }
    while (static_cast<int>(cache.size()) <= n) {
        const int i = static_cast<int>(cache.size());
        Poly1 next = Poly1::monomial(1, Int(2)) * *cache[i - 1] - *cache[i - 2] * Int(2 * (i - 1));
        cache.push_back(std::make_unique<const Poly1>(std::move(next)));
    }
    return *cache[static_cast<std::size_t>(n)];
}

Poly1 hermite_product(std::span<const int> indices) {
    Poly1 acc = Poly1::constant(Int(1));
    for (int i : indices) acc = acc * hermite(i);
    return acc;
}

}  // namespace hermsq
