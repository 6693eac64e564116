#include "radlab/prime_sums.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "radlab/kahan.hpp"

namespace radlab {

namespace {

// is_comp[i] marks i composite, valid for 0 <= i <= n.
std::vector<bool> composite_table(std::uint64_t n) {
    std::vector<bool> is_comp(n + 1, false);
    for (std::uint64_t i = 2; i * i <= n; ++i)
        if (!is_comp[i])
            for (std::uint64_t j = i * i; j <= n; j += i) is_comp[j] = true;
    return is_comp;
}

std::uint64_t floor_arg(double x, const char* who) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument(std::string(who) +
                                    ": x must be finite and >= 0");
    return static_cast<std::uint64_t>(std::floor(x));
}

}  // namespace

double chebyshev_theta(double x) {
    std::uint64_t n = floor_arg(x, "chebyshev_theta");
    if (n < 2) return 0.0;
    auto is_comp = composite_table(n);
    KahanSum sum;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (!is_comp[p]) sum.add(std::log(static_cast<double>(p)));
    return sum.value();
}

double mertens_logsum(double x) {
    std::uint64_t n = floor_arg(x, "mertens_logsum");
    if (n < 2) return 0.0;
    auto is_comp = composite_table(n);
    KahanSum sum;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (!is_comp[p])
            sum.add(std::log(static_cast<double>(p)) / static_cast<double>(p));
    return sum.value();
}

std::uint64_t prime_count(double x) {
    std::uint64_t n = floor_arg(x, "prime_count");
    if (n < 2) return 0;
    auto is_comp = composite_table(n);
    std::uint64_t count = 0;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (!is_comp[p]) ++count;
    return count;
}

}  // namespace radlab
