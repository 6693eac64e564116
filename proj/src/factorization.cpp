#include "radlab/factorization.hpp"

#include <cassert>
#include <stdexcept>

namespace radlab {

Factorization::Factorization(std::uint64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
#ifndef NDEBUG
    std::uint64_t prod = 1;
    std::uint64_t prev = 1;
    for (const auto& f : factors_) {
        assert(f.prime > prev);
        assert(f.exponent >= 1);
        prev = f.prime;
        for (std::uint32_t e = 0; e < f.exponent; ++e) prod *= f.prime;
    }
    assert(prod == n_);
#endif
}

std::uint64_t Factorization::radical() const {
    std::uint64_t r = 1;
    for (const auto& f : factors_) r *= f.prime;
    return r;
}

std::uint64_t Factorization::phi() const {
    std::uint64_t r = 1;
    for (const auto& f : factors_) {
        for (std::uint32_t e = 1; e < f.exponent; ++e) r *= f.prime;
        r *= f.prime - 1;
    }
    return r;
}

Factorization Factorization::without_factor(std::size_t i) const {
    if (i >= factors_.size())
        throw std::out_of_range("Factorization::without_factor: bad index");
    std::uint64_t m = n_;
    for (std::uint32_t e = 0; e < factors_[i].exponent; ++e)
        m /= factors_[i].prime;
    std::vector<PrimePower> rest = factors_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    return Factorization(m, std::move(rest));
}

std::vector<SquarefreeDivisor> squarefree_divisors(const Factorization& f) {
    const auto& fs = f.factors();
    const std::size_t w = fs.size();
    std::vector<SquarefreeDivisor> out;
    out.reserve(std::size_t{1} << w);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w); ++mask) {
        std::uint64_t d = 1;
        int sign = 1;
        for (std::size_t b = 0; b < w; ++b)
            if (mask & (std::uint64_t{1} << b)) {
                d *= fs[b].prime;
                sign = -sign;
            }
        out.push_back({d, sign});
    }
    return out;
}

std::uint64_t coprime_count(const Rational& t, const Factorization& c) {
    if (t < Rational(0))
        throw std::invalid_argument("coprime_count: t must be >= 0");
    const auto& fs = c.factors();
    const std::size_t w = fs.size();
    using u128 = unsigned __int128;
    const u128 numer = static_cast<u128>(t.num());

    std::int64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w); ++mask) {
        u128 denom = static_cast<u128>(t.den());
        int sign = 1;
        for (std::size_t b = 0; b < w; ++b)
            if (mask & (std::uint64_t{1} << b)) {
                denom *= fs[b].prime;
                sign = -sign;
            }
        std::int64_t term = static_cast<std::int64_t>(numer / denom);
        total += sign > 0 ? term : -term;
    }
    assert(total >= 0);
    return static_cast<std::uint64_t>(total);
}

}  // namespace radlab
