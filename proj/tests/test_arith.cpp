#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "radlab/factorization.hpp"
#include "radlab/prime_sums.hpp"
#include "radlab/rational.hpp"
#include "radlab/sieve.hpp"

using namespace radlab;

TEST_CASE("spf table answers smallest prime factor queries") {
    SpfTable t(30);
    CHECK(t.spf(9) == 3);
    CHECK(t.spf(10) == 2);
    CHECK(t.spf(25) == 5);
    CHECK(t.spf(29) == 29);
    CHECK(t.is_prime(29));
    CHECK_FALSE(t.is_prime(27));

    SpfTable tiny(2);
    CHECK(tiny.spf(2) == 2);

    CHECK_THROWS_AS(SpfTable(1), std::invalid_argument);
    CHECK_THROWS_AS(t.spf(31), std::out_of_range);
    CHECK_THROWS_AS(t.factorize(31), std::out_of_range);
    CHECK_THROWS_AS(t.factorize(0), std::invalid_argument);
}

TEST_CASE("factorize matches trial division and reconstructs n") {
    SpfTable t(10000);
    auto f12 = t.factorize(12);
    REQUIRE(f12.factors().size() == 2);
    CHECK(f12.factors()[0] == PrimePower{2, 2});
    CHECK(f12.factors()[1] == PrimePower{3, 1});

    CHECK(t.factorize(1).factors().empty());
    CHECK(t.factorize(1).omega() == 0);

    auto f6300 = t.factorize(6300);
    REQUIRE(f6300.factors().size() == 4);
    CHECK(f6300.factors()[0] == PrimePower{2, 2});
    CHECK(f6300.factors()[1] == PrimePower{3, 2});
    CHECK(f6300.factors()[2] == PrimePower{5, 2});
    CHECK(f6300.factors()[3] == PrimePower{7, 1});

    for (std::uint64_t n = 1; n <= 10000; ++n) {
        auto f = t.factorize(n);
        auto ref = oracle::factorize(n);
        REQUIRE(f.factors().size() == ref.size());
        std::uint64_t prod = 1;
        for (std::size_t i = 0; i < ref.size(); ++i) {
            CHECK(f.factors()[i].prime == ref[i].first);
            CHECK(f.factors()[i].exponent == ref[i].second);
            for (std::uint32_t e = 0; e < ref[i].second; ++e)
                prod *= ref[i].first;
        }
        REQUIRE(prod == n);
    }
}

TEST_CASE("radical and phi") {
    SpfTable t(5000);
    CHECK(t.factorize(12).radical() == 6);
    CHECK(t.factorize(1).radical() == 1);
    CHECK(t.factorize(90).radical() == 30);

    CHECK(t.factorize(10).phi() == 4);
    CHECK(t.factorize(9).phi() == 6);
    CHECK(t.factorize(1).phi() == 1);

    for (std::uint64_t n = 1; n <= 3000; ++n) {
        CHECK(t.factorize(n).radical() == oracle::radical(n));
        CHECK(t.factorize(n).phi() == oracle::phi(n));
    }
}

TEST_CASE("squarefree divisors enumerate the alternating-sum structure") {
    SpfTable t(100);

    auto d10 = squarefree_divisors(t.factorize(10));
    REQUIRE(d10.size() == 4);
    int pos = 0, neg = 0;
    bool has_one = false;
    for (const auto& d : d10) {
        CHECK(10 % d.d == 0);
        (d.moebius_sign > 0 ? pos : neg)++;
        if (d.d == 1) {
            has_one = true;
            CHECK(d.moebius_sign == 1);
        }
    }
    CHECK(has_one);
    CHECK(pos == 2);
    CHECK(neg == 2);

    auto d1 = squarefree_divisors(t.factorize(1));
    REQUIRE(d1.size() == 1);
    CHECK(d1[0] == SquarefreeDivisor{1, 1});

    auto d30 = squarefree_divisors(t.factorize(30));
    CHECK(d30.size() == 8);

    // sign sum is 0 for omega >= 1 and 1 for omega = 0
    for (std::uint64_t n = 1; n <= 100; ++n) {
        int sum = 0;
        std::uint64_t rad = t.factorize(n).radical();
        for (const auto& d : squarefree_divisors(t.factorize(n))) {
            sum += d.moebius_sign;
            CHECK(rad % d.d == 0);
        }
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("coprime_count agrees with direct gcd counting") {
    SpfTable t(2000);

    CHECK(coprime_count(Rational(10, 3), t.factorize(10)) == 2);
    CHECK(coprime_count(Rational(0), t.factorize(17)) == 0);
    CHECK(coprime_count(Rational(9), t.factorize(9)) == 6);

    // exhaustive over small c, every rational u/v with u, v <= c
    for (std::uint64_t c = 1; c <= 40; ++c) {
        auto f = t.factorize(c);
        for (std::uint64_t u = 0; u <= c; ++u)
            for (std::uint64_t v = 1; v <= c; ++v)
                CHECK(coprime_count(Rational(static_cast<std::int64_t>(u),
                                             static_cast<std::int64_t>(v)),
                                    f) == oracle::coprime_count(u, v, c));
    }

    // randomized sample up to c = 1000
    std::mt19937_64 rng(20240601);
    for (int iter = 0; iter < 4000; ++iter) {
        std::uint64_t c = 2 + rng() % 999;
        std::uint64_t u = rng() % (c + 1);
        std::uint64_t v = 1 + rng() % c;
        CHECK(coprime_count(Rational(static_cast<std::int64_t>(u),
                                     static_cast<std::int64_t>(v)),
                            t.factorize(c)) == oracle::coprime_count(u, v, c));
    }

    // full range gives the totient
    for (std::uint64_t c = 1; c <= 1500; ++c)
        CHECK(coprime_count(Rational(static_cast<std::int64_t>(c)),
                            t.factorize(c)) == t.factorize(c).phi());

    CHECK_THROWS_AS(coprime_count(Rational(-1), t.factorize(6)),
                    std::invalid_argument);
}

TEST_CASE("chebyshev theta") {
    // oracle values: sums of logs of the primes involved
    CHECK(chebyshev_theta(10) ==
          doctest::Approx(5.3471075307174685).epsilon(1e-12));
    CHECK(chebyshev_theta(1.5) == 0.0);
    CHECK(chebyshev_theta(2) ==
          doctest::Approx(0.6931471805599453).epsilon(1e-12));
    CHECK(chebyshev_theta(0) == 0.0);

    // nondecreasing step function, jumping by log p exactly at primes
    double prev = 0.0;
    for (std::uint64_t n = 2; n <= 300; ++n) {
        double now = chebyshev_theta(static_cast<double>(n));
        double jump = now - prev;
        bool prime = oracle::factorize(n).size() == 1 &&
                     oracle::factorize(n)[0].second == 1 &&
                     oracle::factorize(n)[0].first == n;
        if (prime)
            CHECK(jump == doctest::Approx(std::log(static_cast<double>(n)))
                              .epsilon(1e-12));
        else
            CHECK(jump == 0.0);
        CHECK(now >= prev);
        prev = now;
        // value is flat between integers
        CHECK(chebyshev_theta(n + 0.5) == now);
    }

    CHECK_THROWS_AS(chebyshev_theta(-1.0), std::invalid_argument);
}

TEST_CASE("mertens log sum") {
    CHECK(mertens_logsum(10) ==
          doctest::Approx(1.312652433140255).epsilon(1e-12));
    CHECK(mertens_logsum(1) == 0.0);
    CHECK(mertens_logsum(3) ==
          doctest::Approx(0.7127776865026759).epsilon(1e-12));
    CHECK_THROWS_AS(mertens_logsum(-0.5), std::invalid_argument);
}

TEST_CASE("prime count") {
    CHECK(prime_count(30) == 10);
    CHECK(prime_count(1) == 0);
    CHECK(prime_count(2) == 1);
    CHECK(prime_count(29.999) == 10);
    CHECK(prime_count(100000) == 9592);
}

TEST_CASE("rational arithmetic is exact and ordered") {
    Rational a(10, 4);
    CHECK(a.num() == 5);
    CHECK(a.den() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(4, 3) + Rational(2) == Rational(10, 3));
    CHECK(Rational(4, 3) - Rational(2) == Rational(-2, 3));
    CHECK(Rational(4, 3) * Rational(3, 2) == Rational(2));
    CHECK(Rational(4, 3) / Rational(2, 9) == Rational(6));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 2).to_double() == 3.5);
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 3) / Rational(0), std::invalid_argument);
}
