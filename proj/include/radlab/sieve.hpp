#pragma once

#include <cstdint>
#include <vector>

#include "radlab/factorization.hpp"

namespace radlab {

/// Smallest-prime-factor table over [2, limit], plus the prime list.
/// Immutable after construction and safe to share across threads.
class SpfTable {
public:
    explicit SpfTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    /// Smallest prime factor of n, 2 <= n <= limit.
    std::uint32_t spf(std::uint64_t n) const;

    bool is_prime(std::uint64_t n) const;

    /// Primes <= limit, ascending.
    const std::vector<std::uint32_t>& primes() const { return primes_; }

    /// Factorize 1 <= n <= limit by repeated spf division.
    Factorization factorize(std::uint64_t n) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

}  // namespace radlab
