#include "radlab/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "radlab/ec.hpp"

namespace radlab {

namespace {

void require_c_at_least(std::uint64_t c, std::uint64_t min, const char* who) {
    if (c < min)
        throw std::domain_error(std::string(who) + ": requires c >= " +
                                std::to_string(min));
}

void require_in_table(std::uint64_t c, const SpfTable& table, const char* who) {
    if (c > table.limit())
        throw std::out_of_range(std::string(who) + ": c exceeds table limit");
}

// Push the distinct primes of n onto out (n <= table limit).
void collect_primes(std::uint64_t n, const SpfTable& table,
                    std::vector<std::uint64_t>& out) {
    while (n > 1) {
        std::uint64_t p = table.spf(n);
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
}

}  // namespace

std::vector<CoprimePartition> enumerate_coprime_partitions(std::uint64_t c) {
    require_c_at_least(c, 3, "enumerate_coprime_partitions");
    std::vector<CoprimePartition> parts;
    // gcd(a, c - a) = gcd(a, c), so one gcd against c suffices.
    for (std::uint64_t a = 1; a <= (c - 1) / 2; ++a)
        if (std::gcd(a, c) == 1) parts.push_back({a, c - a, c});
    return parts;
}

ExponentVector gc_bruteforce(std::uint64_t c, const SpfTable& table) {
    require_c_at_least(c, 3, "gc_bruteforce");
    require_in_table(c, table, "gc_bruteforce");

    // a, b, c are pairwise coprime (d | a and d | c forces d | b), so
    // R(abc) = R(a) R(b) R(c) with disjoint prime sets.
    ExponentVector gc;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t a = 1; a <= (c - 1) / 2; ++a) {
        if (std::gcd(a, c) != 1) continue;
        primes.clear();
        collect_primes(a, table, primes);
        collect_primes(c - a, table, primes);
        collect_primes(c, table, primes);
        for (std::uint64_t p : primes) gc.add(p, 1);
    }
    return gc;
}

ExponentVector gc_theorem1(std::uint64_t c, const SpfTable& table) {
    require_c_at_least(c, 3, "gc_theorem1");
    require_in_table(c, table, "gc_theorem1");

    const Factorization cf = table.factorize(c);
    const std::uint64_t half_phi = cf.phi() / 2;

    ExponentVector gc;
    for (const auto& f : cf.factors()) gc.add(f.prime, half_phi);
    for (std::uint32_t p : table.primes()) {
        if (p >= c) break;
        if (c % p == 0) continue;
        gc.add(p, ec(cf, Rational(static_cast<std::int64_t>(p))));
    }
    return gc;
}

ExponentVector all_partitions_product(std::uint64_t c, const SpfTable& table) {
    require_c_at_least(c, 2, "all_partitions_product");
    require_in_table(c, table, "all_partitions_product");

    const Factorization cf = table.factorize(c);
    ExponentVector out;
    for (const auto& f : cf.factors()) out.add(f.prime, c / 2);
    for (std::uint32_t p : table.primes()) {
        if (p >= c) break;
        if (c % p == 0) continue;
        out.add(p, c / p);
    }
    return out;
}

ExponentVector all_partitions_bruteforce(std::uint64_t c,
                                         const SpfTable& table) {
    require_c_at_least(c, 2, "all_partitions_bruteforce");
    require_in_table(c, table, "all_partitions_bruteforce");

    // x, y, c may share primes here, so each radical needs the distinct
    // union. The x = y row of even c contributes a single radical.
    ExponentVector out;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t x = 1; x <= c / 2; ++x) {
        primes.clear();
        collect_primes(x, table, primes);
        collect_primes(c - x, table, primes);
        collect_primes(c, table, primes);
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        for (std::uint64_t p : primes) out.add(p, 1);
    }
    return out;
}

namespace {

// Ascending divisors of c from its factorization.
std::vector<std::uint64_t> divisors(const Factorization& cf) {
    std::vector<std::uint64_t> ds{1};
    for (const auto& f : cf.factors()) {
        const std::size_t n = ds.size();
        std::uint64_t pe = 1;
        for (std::uint32_t e = 1; e <= f.exponent; ++e) {
            pe *= f.prime;
            for (std::size_t i = 0; i < n; ++i) ds.push_back(ds[i] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Partition count S(d): phi(d)/2 for d >= 3, with S(1) = 0 and S(2) = 1.
std::uint64_t partition_count(const Factorization& df) {
    if (df.n() == 1) return 0;
    if (df.n() == 2) return 1;
    return df.phi() / 2;
}

}  // namespace

CorollarySides corollary_product(std::uint64_t c, const SpfTable& table) {
    require_c_at_least(c, 3, "corollary_product");
    require_in_table(c, table, "corollary_product");

    const Factorization cf = table.factorize(c);
    const auto ds = divisors(cf);

    CorollarySides sides;
    for (std::uint64_t d : ds) {
        if (d == 1) continue;  // G_1 = 1
        if (d == 2) {
            sides.lhs.add(2, 1);  // G_2 = R(1*1*2) = 2
            continue;
        }
        sides.lhs.add_all(gc_bruteforce(d, table));
    }

    for (const auto& f : cf.factors()) {
        std::uint64_t theta = 0;
        for (std::uint64_t d : ds) {
            const Factorization df = table.factorize(d);
            if (d % f.prime == 0)
                theta += partition_count(df);
            else
                theta += ec(df, Rational(static_cast<std::int64_t>(f.prime)));
        }
        sides.rhs.add(f.prime, theta);
    }
    for (std::uint32_t p : table.primes()) {
        if (p >= c) break;
        if (c % p == 0) continue;
        sides.rhs.add(p, c / p);
    }
    return sides;
}

GcReport gc_report(std::uint64_t c, const SpfTable& table) {
    require_c_at_least(c, 3, "gc_report");
    require_in_table(c, table, "gc_report");

    const Factorization cf = table.factorize(c);
    GcReport report;
    report.c = c;
    report.num_partitions = cf.phi() / 2;
    report.gc = gc_theorem1(c, table);
    report.log_geo_mean =
        2.0 * report.gc.log_value() / static_cast<double>(cf.phi());
    report.ratio =
        std::exp(report.log_geo_mean -
                 std::log(static_cast<double>(cf.radical())) -
                 2.0 * std::log(static_cast<double>(c)));
    return report;
}

}  // namespace radlab
