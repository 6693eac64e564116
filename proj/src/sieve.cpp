#include "radlab/sieve.hpp"

#include <limits>
#include <stdexcept>

namespace radlab {

SpfTable::SpfTable(std::uint64_t limit) : limit_(limit) {
    if (limit < 2)
        throw std::invalid_argument("SpfTable: limit must be >= 2");
    if (limit > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("SpfTable: limit exceeds uint32 range");

    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
            // Composites first hit from their smallest prime keep that mark.
            if (i <= limit / i)
                for (std::uint64_t j = i * i; j <= limit; j += i)
                    if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

std::uint32_t SpfTable::spf(std::uint64_t n) const {
    if (n < 2 || n > limit_)
        throw std::out_of_range("SpfTable::spf: n outside [2, limit]");
    return spf_[n];
}

bool SpfTable::is_prime(std::uint64_t n) const {
    if (n < 2) return false;
    if (n > limit_)
        throw std::out_of_range("SpfTable::is_prime: n exceeds limit");
    return spf_[n] == n;
}

Factorization SpfTable::factorize(std::uint64_t n) const {
    if (n == 0)
        throw std::invalid_argument("SpfTable::factorize: n must be positive");
    if (n > limit_)
        throw std::out_of_range("SpfTable::factorize: n exceeds table limit");

    std::vector<PrimePower> factors;
    std::uint64_t m = n;
    while (m > 1) {
        std::uint64_t p = spf_[m];
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        factors.push_back({p, e});
    }
    return Factorization(n, std::move(factors));
}

}  // namespace radlab
