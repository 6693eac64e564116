#pragma once

#include <cstdint>

namespace radlab {

/// theta(x) = sum of log p over primes p <= x; 0 for x < 2.
double chebyshev_theta(double x);

/// sum of (log p)/p over primes p <= x; 0 for x < 2.
double mertens_logsum(double x);

/// pi(x), the number of primes <= x.
std::uint64_t prime_count(double x);

}  // namespace radlab
