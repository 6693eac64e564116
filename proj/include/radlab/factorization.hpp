#pragma once

#include <cstdint>
#include <vector>

#include "radlab/rational.hpp"

namespace radlab {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its ordered prime factorization.
/// Primes are strictly increasing, exponents >= 1, and the product of
/// prime^exponent reconstructs n. n = 1 carries an empty factor list.
class Factorization {
public:
    Factorization() : n_(1) {}
    Factorization(std::uint64_t n, std::vector<PrimePower> factors);

    std::uint64_t n() const { return n_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

    std::size_t omega() const { return factors_.size(); }

    /// Product of the distinct primes; 1 for n = 1.
    std::uint64_t radical() const;

    /// Euler totient, phi(1) = 1.
    std::uint64_t phi() const;

    /// The cofactor with factor i removed entirely (n / prime_i^exponent_i).
    Factorization without_factor(std::size_t i) const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::uint64_t n_;
    std::vector<PrimePower> factors_;
};

struct SquarefreeDivisor {
    std::uint64_t d;
    int moebius_sign;  // +1 or -1

    friend bool operator==(const SquarefreeDivisor&,
                           const SquarefreeDivisor&) = default;
};

/// All 2^omega squarefree divisors of radical(f), each with its Moebius sign.
std::vector<SquarefreeDivisor> squarefree_divisors(const Factorization& f);

/// |{n : 1 <= n <= t, gcd(n, c) = 1}| for rational t >= 0, evaluated as the
/// alternating floor sum over squarefree divisors with exact floors.
std::uint64_t coprime_count(const Rational& t, const Factorization& c);

}  // namespace radlab
