#pragma once

// Brute-force reference computations for the unit and acceptance suites.
// Everything here works by trial division and direct counting only, so it
// shares no code with the sieve/floor-sum paths under test.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

inline std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(
    std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::uint64_t radical(std::uint64_t n) {
    std::uint64_t r = 1;
    for (const auto& [p, e] : factorize(n)) r *= p;
    return r;
}

inline std::uint64_t phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return n == 0 ? 0 : (n == 1 ? 1 : r);
}

// |{n : 1 <= n <= num/den, gcd(n, c) = 1}| by direct gcd counting.
inline std::uint64_t coprime_count(std::uint64_t num, std::uint64_t den,
                                   std::uint64_t c) {
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n * den <= num; ++n)
        if (std::gcd(n, c) == 1) ++count;
    return count;
}

// E_c(x) for rational x = xn/xd: count of n <= c/x coprime to c.
inline std::uint64_t ec(std::uint64_t c, std::uint64_t xn,
                        std::uint64_t xd = 1) {
    return coprime_count(c * xd, xn, c);
}

// G_c as a prime -> exponent map, straight off the partition list.
inline std::map<std::uint64_t, std::uint64_t> gc(std::uint64_t c) {
    std::map<std::uint64_t, std::uint64_t> ev;
    for (std::uint64_t a = 1; 2 * a < c; ++a) {
        if (std::gcd(a, c - a) != 1) continue;
        for (std::uint64_t m : {a, c - a, c})
            for (const auto& [p, e] : factorize(m)) ev[p] += 1;
    }
    return ev;
}

}  // namespace oracle
