#pragma once

#include <cstdint>

#include "radlab/factorization.hpp"
#include "radlab/rational.hpp"

namespace radlab {

/// E_c(x) = [c/x] - sum_i [c/(x q_i)] + sum_{i<j} [c/(x q_i q_j)] - ...
/// i.e. the number of integers n <= c/x coprime to c. Floors are exact
/// (x is rational), x must be positive.
std::uint64_t ec(const Factorization& c, const Rational& x);

/// Envelope of E_c(x) for 0 < x < c, omega >= 1:
///   max(0, phi/x - 2^(omega-1))  <  E_c(x)  <  phi/x + 2^(omega-1)
/// plus the piecewise floor: phi/x - 2^(omega-1) while x < phi/2^(omega-1),
/// and 1 from there on. All bounds are exact rationals.
struct EcBounds {
    Rational lower;          // max(0, phi/x - 2^(omega-1))
    Rational upper;          // phi/x + 2^(omega-1)
    std::uint64_t value;     // E_c(x)
    Rational lemma2_lower;   // branch value described above
    bool floor_branch;       // true once x >= phi/2^(omega-1)

    bool envelope_strict() const {
        Rational v(static_cast<std::int64_t>(value));
        return lower < v && v < upper;
    }
    bool floor_holds() const {
        Rational v(static_cast<std::int64_t>(value));
        return floor_branch ? !(v < lemma2_lower) : lemma2_lower < v;
    }
};

EcBounds ec_bounds(const Factorization& c, const Rational& x);

/// phi(c)/q_i for a factor with exponent >= 2; equals E_c(q_i) exactly.
Rational ec_lemma3(const Factorization& c, std::size_t i);

/// phi(c)/(q_i - 1) - E_{c/q_i}(q_i) for a factor with exponent 1; equals
/// E_c(q_i) exactly.
Rational ec_lemma4(const Factorization& c, std::size_t i);

}  // namespace radlab
