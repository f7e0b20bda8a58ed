#include "hermsq/asymptotics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hermsq/closed_forms.hpp"

namespace hermsq {

namespace {

constexpr std::array<std::string_view, 8> kCatalogue{
    "Hn",
    "Hnn",
    "Hnnn",
    "Hnnn/H(n+1)(n-1)(n)",
    "Hnnn/H(n-1)(n-1)(n)",
    "Hnnn/H(n-2)(n)(n)",
    "Hnn0/H(n+1)(n-1)(0)",
    "Hnn0/H(n-1)(n-1)(0)",
};

double ln_of(long n) { return std::log(static_cast<double>(n)); }

}  // namespace

double log_magnitude(const Rat& x) {
    if (x.is_zero()) throw std::domain_error("log_magnitude: zero value");
    signed long en = 0, ed = 0;
    const double mn = mpz_get_d_2exp(&en, x.num().get_mpz_t());
    const double md = mpz_get_d_2exp(&ed, x.den().get_mpz_t());
    return (std::log(std::fabs(mn)) + static_cast<double>(en) * std::numbers::ln2) -
           (std::log(md) + static_cast<double>(ed) * std::numbers::ln2);
}

std::span<const std::string_view> asym_catalogue() { return kCatalogue; }

std::vector<AsymRow> asym_table(std::string_view quantity, std::span<const int> ns) {
    int id = -1;
    for (std::size_t i = 0; i < kCatalogue.size(); ++i) {
        if (kCatalogue[i] == quantity) id = static_cast<int>(i);
    }
    if (id < 0) {
        std::string msg = "asym_table: unknown quantity '" + std::string(quantity) + "'; catalogue:";
        for (auto c : kCatalogue) {
            msg += ' ';
            msg += c;
        }
        throw std::invalid_argument(msg);
    }

    const double half_ln2 = 0.5 * std::numbers::ln2;
    std::vector<AsymRow> rows;
    for (int n : ns) {
        AsymRow row;
        row.n = n;
        row.quantity = std::string(quantity);
        switch (id) {
            case 0: {  // ln|H_n| vs (n/2) ln(n/e) + ln sqrt(2)
                if (n < 2 || n % 2 != 0) continue;
                row.exact = closed_h1(n);
                row.predicted = 0.5 * n * (ln_of(n) - 1.0) + half_ln2;
                break;
            }
            case 1: {  // ln H_nn vs n ln(n/e) + n ln2 + ln sqrt(2)
                if (n < 1) continue;
                row.exact = closed_h2(n, n);
                row.predicted = n * (ln_of(n) - 1.0) + n * std::numbers::ln2 + half_ln2;
                break;
            }
            case 2: {  // ln|H_nnn| vs (3n/2) ln(n/e) + ln(2 sqrt 2)
                if (n < 2 || n % 2 != 0) continue;
                row.exact = closed_h3(n, n, n);
                row.predicted = 1.5 * n * (ln_of(n) - 1.0) + 3.0 * half_ln2;
                break;
            }
            case 3: {
                if (n < 2 || n % 2 != 0) continue;
                row.exact = closed_h3(n, n, n) / closed_h3(n + 1, n - 1, n);
                row.predicted = 1.0 - 2.0 / n;
                break;
            }
            case 4: {
                if (n < 2 || n % 2 != 0) continue;
                row.exact = closed_h3(n, n, n) / closed_h3(n - 1, n - 1, n);
                row.predicted = static_cast<double>(n) - 1.0;
                break;
            }
            case 5: {
                if (n < 2 || n % 2 != 0) continue;
                row.exact = closed_h3(n, n, n) / closed_h3(n - 2, n, n);
                row.predicted = static_cast<double>(n) - 3.0;
                break;
            }
            case 6: {
                if (n < 1) continue;
                row.exact = closed_h2(n, n) / closed_h2(n + 1, n - 1);
                row.predicted = -1.0;
                break;
            }
            case 7: {
                if (n < 1) continue;
                row.exact = closed_h2(n, n) / closed_h2(n - 1, n - 1);
                row.predicted = 2.0 * n - 1.0;
                break;
            }
            default:
                continue;
        }
        const bool growth = id <= 2;
        const double measured = growth ? log_magnitude(row.exact) : row.exact.to_double();
        row.abs_error = std::fabs(measured - row.predicted);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hermsq
