#include "radlab/ec.hpp"

#include <cassert>
#include <stdexcept>

namespace radlab {

namespace {

// sum over squarefree divisors d of R(c) of sign(d) * floor(num / (den * d)).
std::uint64_t alternating_floor_sum(unsigned __int128 num, std::uint64_t den,
                                    const Factorization& c) {
    using u128 = unsigned __int128;
    const auto& fs = c.factors();
    const std::size_t w = fs.size();
    std::int64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w); ++mask) {
        u128 d = den;
        int sign = 1;
        for (std::size_t b = 0; b < w; ++b)
            if (mask & (std::uint64_t{1} << b)) {
                d *= fs[b].prime;
                sign = -sign;
            }
        std::int64_t term = static_cast<std::int64_t>(num / d);
        total += sign > 0 ? term : -term;
    }
    assert(total >= 0);
    return static_cast<std::uint64_t>(total);
}

}  // namespace

std::uint64_t ec(const Factorization& c, const Rational& x) {
    if (!(Rational(0) < x))
        throw std::invalid_argument("ec: x must be positive");
    // floor(c / (x d)) = floor(c * x.den / (x.num * d))
    unsigned __int128 num =
        static_cast<unsigned __int128>(c.n()) * static_cast<std::uint64_t>(x.den());
    return alternating_floor_sum(num, static_cast<std::uint64_t>(x.num()), c);
}

EcBounds ec_bounds(const Factorization& c, const Rational& x) {
    if (c.omega() == 0)
        throw std::domain_error("ec_bounds: c must have omega >= 1");
    if (!(Rational(0) < x))
        throw std::invalid_argument("ec_bounds: x must be positive");
    if (!(x < Rational(static_cast<std::int64_t>(c.n()))))
        throw std::domain_error("ec_bounds: requires x < c");

    const auto phi = static_cast<std::int64_t>(c.phi());
    const Rational slack(std::int64_t{1} << (c.omega() - 1));
    const Rational phi_over_x = Rational(phi) / x;

    EcBounds b;
    b.upper = phi_over_x + slack;
    const Rational raw = phi_over_x - slack;
    b.lower = Rational(0) < raw ? raw : Rational(0);
    b.value = ec(c, x);
    b.floor_branch = !(Rational(0) < raw);  // x >= phi / 2^(omega-1)
    b.lemma2_lower = b.floor_branch ? Rational(1) : raw;
    return b;
}

Rational ec_lemma3(const Factorization& c, std::size_t i) {
    const auto& fs = c.factors();
    if (i >= fs.size()) throw std::out_of_range("ec_lemma3: bad factor index");
    if (fs[i].exponent < 2)
        throw std::domain_error("ec_lemma3: factor exponent must be >= 2");
    return Rational(static_cast<std::int64_t>(c.phi()),
                    static_cast<std::int64_t>(fs[i].prime));
}

Rational ec_lemma4(const Factorization& c, std::size_t i) {
    const auto& fs = c.factors();
    if (i >= fs.size()) throw std::out_of_range("ec_lemma4: bad factor index");
    if (fs[i].exponent != 1)
        throw std::domain_error("ec_lemma4: factor exponent must be 1");
    const std::int64_t q = static_cast<std::int64_t>(fs[i].prime);
    const Factorization cbar = c.without_factor(i);
    const std::uint64_t tail = ec(cbar, Rational(q));
    return Rational(static_cast<std::int64_t>(c.phi()), q - 1) -
           Rational(static_cast<std::int64_t>(tail));
}

}  // namespace radlab
