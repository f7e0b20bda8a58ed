#include "hermsq/combinatorics.hpp"

#include <stdexcept>

namespace hermsq {

Rat double_factorial(long a) {
    if (a >= -1) {
        Int acc(1);
        for (long v = a; v >= 2; v -= 2) acc *= v;
        return Rat(acc);
    }
    if (a % 2 == 0) {
        throw std::domain_error("double_factorial: negative even argument");
    }
    // a = -(2j+1): a!! = (-1)^j / (2j-1)!!
    long j = (-a - 1) / 2;
    Int odd(1);
    for (long v = 2 * j - 1; v >= 3; v -= 2) odd *= v;
    return (j % 2 == 0) ? Rat(Int(1), odd) : Rat(Int(-1), odd);
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long p, unsigned long k) {
    if (k > p) throw std::domain_error("binomial: k > p");
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), p, k);
    return r;
}

bool is_even_sum(std::span<const int> indices) {
    int parity = 0;
    for (int i : indices) parity ^= (i & 1);
    return parity == 0;
}

}  // namespace hermsq
