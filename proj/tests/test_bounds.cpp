#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "radlab/bounds.hpp"
#include "radlab/errors.hpp"
#include "radlab/sieve.hpp"

using namespace radlab;

namespace {
const SpfTable& table() {
    static SpfTable t(3000);
    return t;
}

const BaseConstants& constants() {
    static BaseConstants k = estimate_base_constants(100000);
    return k;
}

double paper_residual_n(double x, double eps) {
    return x - 1.0 - 2.0 * std::pow(x, 1.0 / x + 0.5 * (2.0 - eps));
}

double paper_residual_m(double x, double eps) {
    return x - 1.0 - 2.0 * std::pow(x, 1.0 / (x - 1.0) + 0.5 * (2.0 - eps));
}
}  // namespace

TEST_CASE("derived constants satisfy their defining formulas") {
    const auto& k = constants();
    CHECK(k.k1 == 0.2);
    CHECK(k.k2 == 1.39);
    CHECK(k.k3 == 2.0);
    CHECK(std::abs(k.k4 - 4.0 * std::exp(-2.0 * k.k3 + 2.0 * k.k1 - 4.0 * k.k2)) <=
          1e-12 * k.k4);
    CHECK(std::abs(k.k5 - std::exp(2.0 * k.k3)) <= 1e-12 * k.k5);
    CHECK(std::abs(k.k6 - std::exp(2.0 * k.k2)) <= 1e-12 * k.k6);
    CHECK(k.k6 > 1.0);
    CHECK(k.validated_limit == 100000);
}

TEST_CASE("default constants pass the scan, perturbed ones fail loudly") {
    auto ok = validate_constants(0.2, 1.39, 2.0, 100000);
    CHECK(ok.ok);
    CHECK(ok.violations.empty());

    // theta(x)/x dips to log(2)/3 just below x = 3, so k1 = 0.25 fails there
    auto bad1 = validate_constants(0.25, 1.39, 2.0, 1000);
    REQUIRE_FALSE(bad1.ok);
    CHECK(bad1.violations.front().constant == "k1");
    CHECK(bad1.violations.front().x == 3.0);

    // theta(3) = log 6 > 0.5 * 3
    auto bad2 = validate_constants(0.2, 0.5, 2.0, 1000);
    REQUIRE_FALSE(bad2.ok);
    CHECK(bad2.violations.front().constant == "k2");

    auto bad3 = validate_constants(0.2, 1.39, 0.5, 1000);
    REQUIRE_FALSE(bad3.ok);
    CHECK(bad3.violations.front().constant == "k3");
    CHECK(bad3.violations.front().x == 3.0);

    CHECK_THROWS_AS(validate_constants(0.2, 1.39, 2.0, 99),
                    std::invalid_argument);
    CHECK_THROWS_AS(estimate_base_constants(99), std::invalid_argument);
}

TEST_CASE("threshold equations: roots, brackets, residuals") {
    SUBCASE("eps = 0.5 roots lie in (29, 30)") {
        // sign change verified against the raw equations first
        CHECK(paper_residual_n(29.0, 0.5) < 0.0);
        CHECK(paper_residual_n(30.0, 0.5) > 0.0);
        CHECK(paper_residual_m(29.0, 0.5) < 0.0);
        CHECK(paper_residual_m(30.0, 0.5) > 0.0);

        double n = solve_n_epsilon(0.5);
        double m = solve_m_epsilon(0.5);
        CHECK(n > 29.0);
        CHECK(n < 30.0);
        CHECK(m > 29.0);
        CHECK(m < 30.0);
        CHECK(std::abs(paper_residual_n(n, 0.5)) < 1e-6);
        CHECK(std::abs(paper_residual_m(m, 0.5)) < 1e-6);
    }
    SUBCASE("eps = 1.9 roots are small") {
        double n = solve_n_epsilon(1.9);
        double m = solve_m_epsilon(1.9);
        CHECK(n >= 2.0);
        CHECK(n < 6.0);
        CHECK(m >= 2.0);
        CHECK(m < 6.0);
        CHECK(std::abs(paper_residual_n(n, 1.9)) < 1e-6);
        CHECK(std::abs(paper_residual_m(m, 1.9)) < 1e-6);
    }
    SUBCASE("roots grow as eps shrinks") {
        CHECK(solve_n_epsilon(0.25) > solve_n_epsilon(0.5));
        CHECK(solve_n_epsilon(0.5) > solve_n_epsilon(1.0));
        CHECK(solve_n_epsilon(1.0) > solve_n_epsilon(1.5));
        CHECK(solve_m_epsilon(0.25) > solve_m_epsilon(0.5));
    }
    SUBCASE("domain and cap") {
        CHECK_THROWS_AS(solve_n_epsilon(0.0), std::invalid_argument);
        CHECK_THROWS_AS(solve_n_epsilon(2.0), std::invalid_argument);
        CHECK_THROWS_AS(solve_m_epsilon(-0.1), std::invalid_argument);
        // the root for eps = 0.01 sits near 2^200, far beyond the cap
        CHECK_THROWS_AS(solve_n_epsilon(0.01), SolverError);
        CHECK_THROWS_AS(solve_m_epsilon(0.01), SolverError);
    }
}

TEST_CASE("epsilon plan assembles pi counts and k_eps") {
    auto plan = make_epsilon_plan(0.5, constants());
    CHECK(plan.pi_n == 10);
    CHECK(plan.pi_m == 10);
    CHECK(plan.k_eps == std::ldexp(constants().k4, -110));
    CHECK(std::abs(plan.log_k_eps -
                   (std::log(constants().k4) - 110.0 * std::log(2.0))) <
          1e-12 * std::abs(plan.log_k_eps));
    CHECK(plan.k_eps <= constants().k4);

    auto plan19 = make_epsilon_plan(1.9, constants());
    CHECK(plan19.k_eps <= constants().k4);
    CHECK(plan19.k_eps > plan.k_eps);

    auto plan025 = make_epsilon_plan(0.25, constants());
    CHECK(plan025.pi_n == 62);
    CHECK(plan025.pi_m == 62);
    CHECK(plan025.k_eps <= constants().k4);
}

TEST_CASE("f_factor evaluates the per-prime bound term") {
    auto c10 = table().factorize(10);
    CHECK(std::abs(f_factor(2, 1, c10) - std::log(0.25)) < 1e-12);
    CHECK(std::abs(f_factor(5, 1, c10) - std::log(8.94427190999916)) < 1e-12);

    auto c9 = table().factorize(9);
    CHECK(std::abs(f_factor(3, 2, c9) - (7.0 / 3.0) * std::log(3.0)) < 1e-12);

    CHECK_THROWS_AS(f_factor(3, 1, c10), std::invalid_argument);
    CHECK_THROWS_AS(f_factor(2, 2, c10), std::invalid_argument);
}

TEST_CASE("factor classification against the thresholds") {
    auto plan = make_epsilon_plan(0.5, constants());

    auto w10 = classify_factors(table().factorize(10), plan);
    CHECK(w10.w3 == 2);
    CHECK(w10.w1 + w10.w2 + w10.w4 == 0);

    auto w9 = classify_factors(table().factorize(9), plan);
    CHECK(w9.w1 == 1);
    CHECK(w9.total() == 1);

    auto w62 = classify_factors(table().factorize(62), plan);  // 2 * 31
    CHECK(w62.w3 == 1);
    CHECK(w62.w4 == 1);
    CHECK(w62.total() == 2);

    for (std::uint64_t c = 3; c <= 500; ++c) {
        auto f = table().factorize(c);
        auto w = classify_factors(f, plan);
        CHECK(w.total() == f.omega());
        CHECK(w.w1 <= plan.pi_n);
        CHECK(w.w3 <= plan.pi_m);
    }
}

TEST_CASE("theorem 2 lower bound composition") {
    auto c3 = table().factorize(3);
    CHECK(std::abs(theorem2_lower(c3, constants()) -
                   std::log(constants().k4)) < 1e-12);

    auto c10 = table().factorize(10);
    double expect = std::log(constants().k4) + std::log(0.25) +
                    std::log(8.94427190999916);
    CHECK(std::abs(theorem2_lower(c10, constants()) - expect) < 1e-10);

    // the geometric mean of c = 10 sits far above it
    auto report = gc_report(10, table());
    CHECK(report.log_geo_mean > theorem2_lower(c10, constants()) + 1.0);
}

TEST_CASE("theorem 5 upper bound composition") {
    auto c10 = table().factorize(10);
    double expect = std::log(constants().k5) +
                    9.0 * std::log(constants().k6) + std::log(10.0) +
                    2.0 * std::log(10.0);
    CHECK(theorem5_upper(c10, constants()) ==
          doctest::Approx(expect).epsilon(1e-12));
    CHECK(theorem5_upper(c10, constants()) ==
          doctest::Approx(35.92775527898214).epsilon(1e-9));

    auto c9 = table().factorize(9);
    double expect9 = std::log(constants().k5) +
                     3.0 * std::log(constants().k6) + std::log(3.0) +
                     2.0 * std::log(9.0);
    CHECK(theorem5_upper(c9, constants()) ==
          doctest::Approx(expect9).epsilon(1e-12));

    auto c30 = table().factorize(30);
    double expect30 = std::log(constants().k5) +
                      27.0 * std::log(constants().k6) + std::log(30.0) +
                      2.0 * std::log(30.0);
    CHECK(theorem5_upper(c30, constants()) ==
          doctest::Approx(expect30).epsilon(1e-12));
}

TEST_CASE("theorem 3 check and the combined chain") {
    auto plan = make_epsilon_plan(0.5, constants());

    auto r10 = gc_report(10, table());
    auto c10 = table().factorize(10);
    auto t3 = theorem3_check(c10, plan, r10);
    CHECK(t3.satisfied);
    CHECK(t3.log_value == r10.log_geo_mean);
    CHECK(t3.margin > 1.0);

    auto chain = bound_chain_check(c10, r10, constants(), plan);
    CHECK(chain.satisfied);
    CHECK(chain.log_lower ==
          std::max(theorem2_lower(c10, constants()), t3.log_lower));
    CHECK(chain.log_upper == theorem5_upper(c10, constants()));
    CHECK(chain.margin > kMarginTol);

    auto r9 = gc_report(9, table());
    auto c9 = table().factorize(9);
    CHECK(theorem3_check(c9, plan, r9).satisfied);
    CHECK(bound_chain_check(c9, r9, constants(), plan).satisfied);
}
