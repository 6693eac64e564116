#include "radlab/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "radlab/ec.hpp"
#include "radlab/errors.hpp"
#include "radlab/kahan.hpp"
#include "radlab/prime_sums.hpp"

namespace radlab {

BaseConstants BaseConstants::derive(double k1, double k2, double k3,
                                    std::uint64_t validated_limit) {
    BaseConstants k;
    k.k1 = k1;
    k.k2 = k2;
    k.k3 = k3;
    k.k4 = 4.0 * std::exp(-2.0 * k3 + 2.0 * k1 - 4.0 * k2);
    k.k5 = std::exp(2.0 * k3);
    k.k6 = std::exp(2.0 * k2);
    k.validated_limit = validated_limit;
    return k;
}

namespace {

std::vector<bool> composite_table(std::uint64_t n) {
    std::vector<bool> is_comp(n + 1, false);
    for (std::uint64_t i = 2; i * i <= n; ++i)
        if (!is_comp[i])
            for (std::uint64_t j = i * i; j <= n; j += i) is_comp[j] = true;
    return is_comp;
}

}  // namespace

ValidationReport validate_constants(double k1, double k2, double k3,
                                    std::uint64_t limit) {
    if (limit < 100)
        throw std::invalid_argument("validate_constants: limit must be >= 100");

    ValidationReport report;
    report.limit = limit;
    auto& bad = report.violations;

    // theta and the Mertens sum are step functions jumping at primes, so on
    // each gap the extrema of k1 x vs theta, theta vs k2 x and
    // |mertens - log x| land at a prime or at its left limit. Check both
    // sides at every prime and finish at x = limit.
    const auto is_comp = composite_table(limit);
    KahanSum theta;
    KahanSum mertens;

    auto check_point = [&](double x, double theta_val, double mertens_val,
                           const char* side) {
        if (!(k1 * x < theta_val))
            bad.push_back({"k1", x,
                           std::string("k1*x >= theta(x) ") + side + ": " +
                               std::to_string(k1 * x) + " vs " +
                               std::to_string(theta_val)});
        if (!(theta_val < k2 * x))
            bad.push_back({"k2", x,
                           std::string("theta(x) >= k2*x ") + side + ": " +
                               std::to_string(theta_val) + " vs " +
                               std::to_string(k2 * x)});
        const double dev = mertens_val - std::log(x);
        if (!(std::abs(dev) < k3))
            bad.push_back({"k3", x,
                           std::string("|mertens - log x| >= k3 ") + side +
                               ": deviation " + std::to_string(dev)});
    };

    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (is_comp[p]) continue;
        const double pd = static_cast<double>(p);
        if (p > 2)  // the gap below p lies inside [2, limit] only for p > 2
            check_point(pd, theta.value(), mertens.value(), "(left limit)");
        theta.add(std::log(pd));
        mertens.add(std::log(pd) / pd);
        check_point(pd, theta.value(), mertens.value(), "(at prime)");
    }
    check_point(static_cast<double>(limit), theta.value(), mertens.value(),
                "(endpoint)");

    report.ok = bad.empty();
    return report;
}

BaseConstants estimate_base_constants(std::uint64_t limit) {
    constexpr double kDefault1 = 0.2;
    constexpr double kDefault2 = 1.39;
    constexpr double kDefault3 = 2.0;
    ValidationReport report =
        validate_constants(kDefault1, kDefault2, kDefault3, limit);
    if (!report.ok) {
        const auto& v = report.violations.front();
        throw ConstantValidationError("default " + v.constant +
                                      " violated at x = " + std::to_string(v.x) +
                                      " (" + v.details + ")");
    }
    return BaseConstants::derive(kDefault1, kDefault2, kDefault3, limit);
}

namespace {

constexpr double kBracketCap = 1e9;

// Largest root >= 2 of x - 1 = 2 x^(expo(x)) with expo(x) = inv(x) + (2-eps)/2.
double solve_threshold(double eps, bool m_form, const char* who) {
    if (!(eps > 0.0 && eps < 2.0))
        throw std::invalid_argument(std::string(who) +
                                    ": epsilon must lie in (0, 2)");
    auto f = [&](double x) {
        const double inv = m_form ? 1.0 / (x - 1.0) : 1.0 / x;
        return x - 1.0 - 2.0 * std::pow(x, inv + 0.5 * (2.0 - eps));
    };

    if (f(kBracketCap) < 0.0)
        throw SolverError(std::string(who) + ": f still negative at cap " +
                          std::to_string(kBracketCap) +
                          "; largest root exceeds the bracket");

    // Walk doubling points and keep the last nonpositive one; everything
    // above it (up to the cap) evaluates positive, so the largest root sits
    // in (last_neg, next].
    double last_neg = std::numeric_limits<double>::quiet_NaN();
    double next_pos = kBracketCap;
    double prev = 2.0;
    for (double x = 2.0;; x = std::min(x * 2.0, kBracketCap)) {
        if (f(x) <= 0.0) {
            last_neg = x;
        } else if (!std::isnan(last_neg) && last_neg == prev) {
            next_pos = x;
        }
        if (x >= kBracketCap) break;
        prev = x;
    }
    if (std::isnan(last_neg)) return 2.0;  // f > 0 on the whole bracket

    // Refine to the last sign change inside (last_neg, next_pos]: scan a
    // fine grid from the top so a multi-crossing bracket still yields the
    // largest root, then bisect.
    double lo = last_neg;
    double hi = next_pos;
    constexpr int kGrid = 4096;
    const double span = next_pos - last_neg;
    for (int j = kGrid - 1; j >= 0; --j) {
        const double t = last_neg + span * static_cast<double>(j) / kGrid;
        if (f(t) <= 0.0) {
            lo = t;
            hi = last_neg + span * static_cast<double>(j + 1) / kGrid;
            break;
        }
    }
    while (hi - lo > 1e-13 * std::max(1.0, lo)) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double solve_n_epsilon(double epsilon) {
    return solve_threshold(epsilon, false, "solve_n_epsilon");
}

double solve_m_epsilon(double epsilon) {
    return solve_threshold(epsilon, true, "solve_m_epsilon");
}

EpsilonPlan make_epsilon_plan(double epsilon, const BaseConstants& constants) {
    EpsilonPlan plan;
    plan.epsilon = epsilon;
    plan.n_eps = solve_n_epsilon(epsilon);
    plan.m_eps = solve_m_epsilon(epsilon);
    plan.pi_n = prime_count(plan.n_eps);
    plan.pi_m = prime_count(plan.m_eps);
    plan.k4 = constants.k4;
    const std::uint64_t shift = 5 * plan.pi_n + 6 * plan.pi_m;
    plan.log_k_eps =
        std::log(constants.k4) - static_cast<double>(shift) * std::log(2.0);
    // ldexp keeps the division by 2^shift exact while it stays representable.
    const int clamped =
        shift > 100000 ? 100000 : static_cast<int>(shift);
    plan.k_eps = std::ldexp(constants.k4, -clamped);
    return plan;
}

double f_factor(std::uint64_t q, std::uint32_t alpha, const Factorization& c) {
    const auto& fs = c.factors();
    const PrimePower* match = nullptr;
    for (const auto& f : fs)
        if (f.prime == q) match = &f;
    if (match == nullptr)
        throw std::invalid_argument("f_factor: q does not divide c");
    if (match->exponent != alpha)
        throw std::invalid_argument("f_factor: q^alpha does not exactly divide c");

    const double qd = static_cast<double>(q);
    const double e_c_q =
        static_cast<double>(ec(c, Rational(static_cast<std::int64_t>(q))));
    const double phi = static_cast<double>(c.phi());
    const double exponent = 2.0 * alpha - 1.0 - 2.0 * e_c_q / phi;
    return exponent * std::log(qd) + 2.0 * std::log((qd - 1.0) / 2.0);
}

ClassCounts classify_factors(const Factorization& c, const EpsilonPlan& plan) {
    const std::uint64_t n_floor =
        static_cast<std::uint64_t>(std::floor(plan.n_eps));
    const std::uint64_t m_floor =
        static_cast<std::uint64_t>(std::floor(plan.m_eps));
    ClassCounts w;
    for (const auto& f : c.factors()) {
        if (f.exponent >= 2)
            ++(f.prime <= n_floor ? w.w1 : w.w2);
        else
            ++(f.prime <= m_floor ? w.w3 : w.w4);
    }
    return w;
}

double theorem2_lower(const Factorization& c, const BaseConstants& constants) {
    KahanSum sum;
    sum.add(std::log(constants.k4));
    for (const auto& f : c.factors())
        sum.add(f_factor(f.prime, f.exponent, c));
    return sum.value();
}

double theorem5_upper(const Factorization& c, const BaseConstants& constants) {
    const double pow3 = std::pow(3.0, static_cast<double>(c.omega()));
    const double tower = pow3 * std::log(constants.k6);
    if (!std::isfinite(tower))
        throw OverflowError("theorem5_upper: 3^omega term overflows at omega = " +
                            std::to_string(c.omega()));
    return std::log(constants.k5) + tower +
           std::log(static_cast<double>(c.radical())) +
           2.0 * std::log(static_cast<double>(c.n()));
}

namespace {

BoundCheck make_check(double lo, double value, double hi) {
    BoundCheck b;
    b.log_lower = lo;
    b.log_value = value;
    b.log_upper = hi;
    double margin = std::numeric_limits<double>::infinity();
    if (std::isfinite(lo)) margin = std::min(margin, value - lo);
    if (std::isfinite(hi)) margin = std::min(margin, hi - value);
    b.margin = margin;
    b.satisfied = margin > kMarginTol;
    return b;
}

}  // namespace

BoundCheck theorem3_check(const Factorization& c, const EpsilonPlan& plan,
                          const GcReport& report) {
    const double lower = plan.log_k_eps +
                         (1.0 - plan.epsilon) *
                             std::log(static_cast<double>(c.radical())) +
                         2.0 * std::log(static_cast<double>(c.n()));
    return make_check(lower, report.log_geo_mean,
                      std::numeric_limits<double>::infinity());
}

BoundCheck bound_chain_check(const Factorization& c, const GcReport& report,
                             const BaseConstants& constants,
                             const EpsilonPlan& plan) {
    const double t2 = theorem2_lower(c, constants);
    const double t3 = theorem3_check(c, plan, report).log_lower;
    const double t5 = theorem5_upper(c, constants);
    return make_check(std::max(t2, t3), report.log_geo_mean, t5);
}

}  // namespace radlab
