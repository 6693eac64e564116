#include "radlab/exponent_vector.hpp"

#include <cmath>
#include <stdexcept>

#include "radlab/kahan.hpp"

namespace radlab {

void ExponentVector::add(std::uint64_t prime, std::uint64_t exponent) {
    if (exponent == 0) return;
    entries_[prime] += exponent;
}

void ExponentVector::add_all(const ExponentVector& other) {
    for (const auto& [p, e] : other.entries_) entries_[p] += e;
}

double ExponentVector::log_value() const {
    KahanSum sum;
    for (const auto& [p, e] : entries_)
        sum.add(static_cast<double>(e) * std::log(static_cast<double>(p)));
    return sum.value();
}

std::uint64_t ExponentVector::value() const {
    unsigned __int128 v = 1;
    constexpr unsigned __int128 cap = ~std::uint64_t{0};
    for (const auto& [p, e] : entries_)
        for (std::uint64_t i = 0; i < e; ++i) {
            v *= p;
            if (v > cap)
                throw std::overflow_error(
                    "ExponentVector::value: product exceeds uint64");
        }
    return static_cast<std::uint64_t>(v);
}

}  // namespace radlab
