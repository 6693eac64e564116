#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "radlab/ec.hpp"
#include "radlab/sieve.hpp"

using namespace radlab;

namespace {
const SpfTable& table() {
    static SpfTable t(6000);
    return t;
}
}  // namespace

TEST_CASE("ec matches the counting oracle on the worked examples") {
    CHECK(ec(table().factorize(10), Rational(3)) == 2);
    CHECK(ec(table().factorize(10), Rational(1)) == 4);  // phi(10)
    CHECK(ec(table().factorize(9), Rational(2)) == 3);
    CHECK(ec(table().factorize(1), Rational(3)) == 0);
    // rational x: E_10(5/2) counts n <= 4 coprime to 10
    CHECK(ec(table().factorize(10), Rational(5, 2)) == oracle::ec(10, 5, 2));

    CHECK_THROWS_AS(ec(table().factorize(10), Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(ec(table().factorize(10), Rational(-2)),
                    std::invalid_argument);
}

TEST_CASE("ec equals brute-force coprime counting, integer x") {
    for (std::uint64_t c = 2; c <= 300; ++c) {
        auto f = table().factorize(c);
        for (std::uint64_t x = 1; x < c; ++x)
            CHECK(ec(f, Rational(static_cast<std::int64_t>(x))) ==
                  oracle::ec(c, x));
    }
}

TEST_CASE("ec equals brute-force coprime counting, rational x") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 3000; ++iter) {
        std::uint64_t c = 2 + rng() % 399;
        std::uint64_t xn = 1 + rng() % (2 * c);
        std::uint64_t xd = 1 + rng() % 20;
        auto f = table().factorize(c);
        CHECK(ec(f, Rational(static_cast<std::int64_t>(xn),
                             static_cast<std::int64_t>(xd))) ==
              oracle::ec(c, xn, xd));
    }
}

TEST_CASE("ec is nonincreasing in x") {
    for (std::uint64_t c : {360, 509, 2310}) {
        auto f = table().factorize(c);
        std::uint64_t prev = ec(f, Rational(1));
        for (std::uint64_t x = 2; x < c; ++x) {
            std::uint64_t now = ec(f, Rational(static_cast<std::int64_t>(x)));
            CHECK(now <= prev);
            prev = now;
        }
    }
}

TEST_CASE("ec_bounds carries the exact envelope") {
    SUBCASE("c=10, x=3") {
        auto b = ec_bounds(table().factorize(10), Rational(3));
        CHECK(b.lower == Rational(0));  // max(0, 4/3 - 2)
        CHECK(b.value == 2);
        CHECK(b.upper == Rational(10, 3));
        CHECK(b.envelope_strict());
        CHECK(b.floor_branch);  // 3 >= 4/2
        CHECK(b.lemma2_lower == Rational(1));
        CHECK(b.floor_holds());
    }
    SUBCASE("c=4, x=3") {
        auto b = ec_bounds(table().factorize(4), Rational(3));
        CHECK(b.value == 1);
        CHECK(b.floor_branch);  // 3 >= phi(4)/2^0 = 2
        CHECK(b.lemma2_lower == Rational(1));
        CHECK(b.floor_holds());
    }
    SUBCASE("c=9, x=2") {
        auto b = ec_bounds(table().factorize(9), Rational(2));
        CHECK(b.lower == Rational(2));  // 6/2 - 1
        CHECK(b.value == 3);
        CHECK(b.upper == Rational(4));
        CHECK_FALSE(b.floor_branch);
        CHECK(b.lemma2_lower == Rational(2));
        CHECK(b.envelope_strict());
        CHECK(b.floor_holds());
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(ec_bounds(table().factorize(10), Rational(10)),
                        std::domain_error);
        CHECK_THROWS_AS(ec_bounds(table().factorize(10), Rational(11)),
                        std::domain_error);
        CHECK_THROWS_AS(ec_bounds(table().factorize(1), Rational(1, 2)),
                        std::domain_error);
        CHECK_THROWS_AS(ec_bounds(table().factorize(10), Rational(0)),
                        std::invalid_argument);
    }
}

TEST_CASE("envelope is strict and the floor holds across a range") {
    for (std::uint64_t c = 2; c <= 400; ++c) {
        auto f = table().factorize(c);
        for (std::uint64_t x = 1; x < c; ++x) {
            auto b = ec_bounds(f, Rational(static_cast<std::int64_t>(x)));
            CHECK(b.envelope_strict());
            CHECK(b.floor_holds());
            if (b.floor_branch) CHECK(b.value >= 1);
        }
    }
}

TEST_CASE("lemma 3: E_c(q) = phi/q when q^2 | c") {
    SUBCASE("examples") {
        auto c9 = table().factorize(9);
        CHECK(ec_lemma3(c9, 0) == Rational(2));
        CHECK(ec(c9, Rational(3)) == 2);

        auto c12 = table().factorize(12);
        CHECK(ec_lemma3(c12, 0) == Rational(2));
        CHECK(ec(c12, Rational(2)) == 2);

        auto c4 = table().factorize(4);
        CHECK(ec_lemma3(c4, 0) == Rational(1));
    }
    SUBCASE("precondition") {
        auto c10 = table().factorize(10);
        CHECK_THROWS_AS(ec_lemma3(c10, 0), std::domain_error);
        CHECK_THROWS_AS(ec_lemma3(c10, 7), std::out_of_range);
    }
    SUBCASE("exact for every repeated factor, c <= 2000") {
        for (std::uint64_t c = 4; c <= 2000; ++c) {
            auto f = table().factorize(c);
            for (std::size_t i = 0; i < f.factors().size(); ++i) {
                if (f.factors()[i].exponent < 2) continue;
                Rational rhs = ec_lemma3(f, i);
                std::uint64_t lhs = ec(
                    f, Rational(static_cast<std::int64_t>(f.factors()[i].prime)));
                CHECK(Rational(static_cast<std::int64_t>(lhs)) == rhs);
            }
        }
    }
}

TEST_CASE("lemma 4: E_c(q) = phi/(q-1) - E_{c/q}(q) when q || c") {
    SUBCASE("examples") {
        auto c10 = table().factorize(10);
        CHECK(ec_lemma4(c10, 1) == Rational(1));  // q = 5
        CHECK(ec(c10, Rational(5)) == 1);
        CHECK(ec_lemma4(c10, 0) == Rational(2));  // q = 2
        CHECK(ec(c10, Rational(2)) == 2);

        auto c6 = table().factorize(6);
        CHECK(ec_lemma4(c6, 1) == Rational(1));  // q = 3
        CHECK(ec(c6, Rational(3)) == 1);
    }
    SUBCASE("precondition") {
        auto c9 = table().factorize(9);
        CHECK_THROWS_AS(ec_lemma4(c9, 0), std::domain_error);
    }
    SUBCASE("exact for every single factor, c <= 2000") {
        for (std::uint64_t c = 2; c <= 2000; ++c) {
            auto f = table().factorize(c);
            for (std::size_t i = 0; i < f.factors().size(); ++i) {
                if (f.factors()[i].exponent != 1) continue;
                Rational rhs = ec_lemma4(f, i);
                std::uint64_t lhs = ec(
                    f, Rational(static_cast<std::int64_t>(f.factors()[i].prime)));
                CHECK(Rational(static_cast<std::int64_t>(lhs)) == rhs);
            }
        }
    }
}
