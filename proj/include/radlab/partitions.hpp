#pragma once

#include <cstdint>
#include <vector>

#include "radlab/exponent_vector.hpp"
#include "radlab/sieve.hpp"

namespace radlab {

/// a + b = c with gcd(a, b) = 1 and a < b.
struct CoprimePartition {
    std::uint64_t a;
    std::uint64_t b;
    std::uint64_t c;

    friend bool operator==(const CoprimePartition&,
                           const CoprimePartition&) = default;
};

/// All coprime partitions of c >= 3, ascending in a. There are phi(c)/2.
std::vector<CoprimePartition> enumerate_coprime_partitions(std::uint64_t c);

/// G_c = prod over coprime partitions of R(a*b*c), assembled partition by
/// partition. Serves as the independent oracle for gc_theorem1.
ExponentVector gc_bruteforce(std::uint64_t c, const SpfTable& table);

/// G_c via the closed form R(c)^(phi(c)/2) * prod_{2<=p<c, (p,c)=1} p^(E_c(p)).
ExponentVector gc_theorem1(std::uint64_t c, const SpfTable& table);

/// prod over ALL partitions x + y = c, x <= y (coprime or not) of R(xyc),
/// via the closed form R(c)^[c/2] * prod_{2<=p<c, (p,c)=1} p^[c/p].
ExponentVector all_partitions_product(std::uint64_t c, const SpfTable& table);

/// Companion brute force for all_partitions_product: walks x = 1..[c/2] and
/// multiplies the radicals directly (the x = y row of even c counts once).
ExponentVector all_partitions_bruteforce(std::uint64_t c,
                                         const SpfTable& table);

/// Both sides of the divisor-product identity
///   prod_{d|c} G_d = q_1^Theta(q_1) ... q_w^Theta(q_w)
///                    * prod_{2<=p<c, (p,c)=1} p^[c/p]
/// with Theta(q) = sum_{d|c, q|d} S(d) + sum_{d|c, q∤d} E_d(q), where S(d)
/// is the coprime-partition count under the conventions S(1)=0, G_1=1 and
/// S(2)=1, G_2=2 (the single row 1+1=2). The left side is assembled from
/// gc_bruteforce so the two routes stay independent.
struct CorollarySides {
    ExponentVector lhs;
    ExponentVector rhs;

    bool equal() const { return lhs == rhs; }
};

CorollarySides corollary_product(std::uint64_t c, const SpfTable& table);

/// Per-c summary around the geometric mean G_c^(2/phi(c)).
struct GcReport {
    std::uint64_t c = 0;
    std::uint64_t num_partitions = 0;  // phi(c)/2
    ExponentVector gc;
    double log_geo_mean = 0.0;  // (2/phi(c)) * log G_c
    double ratio = 0.0;         // exp(log_geo_mean) / (R(c) * c^2)

    friend bool operator==(const GcReport&, const GcReport&) = default;
};

GcReport gc_report(std::uint64_t c, const SpfTable& table);

}  // namespace radlab
