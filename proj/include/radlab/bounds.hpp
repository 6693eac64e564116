#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radlab/factorization.hpp"
#include "radlab/partitions.hpp"

namespace radlab {

/// Margin required of every strict log-space bound comparison. Real margins
/// are enormous; anything tighter than this is surfaced as a failure.
inline constexpr double kMarginTol = 1e-9;

/// Absolute constants behind the bound chain:
///   k1 x < theta(x) < k2 x        and   |mertens_logsum(x) - log x| < k3
/// for all real 2 <= x <= validated_limit, with the derived set
///   k4 = 4 e^(-2 k3 + 2 k1 - 4 k2),  k5 = e^(2 k3),  k6 = e^(2 k2).
struct BaseConstants {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double k4 = 0.0;
    double k5 = 0.0;
    double k6 = 0.0;
    std::uint64_t validated_limit = 0;

    static BaseConstants derive(double k1, double k2, double k3,
                                std::uint64_t validated_limit);
};

struct ConstantViolation {
    std::string constant;  // "k1", "k2" or "k3"
    double x;              // witness point
    std::string details;
};

struct ValidationReport {
    bool ok = false;
    std::uint64_t limit = 0;
    std::vector<ConstantViolation> violations;
};

/// Scan [2, limit] for violations of the three base inequalities. Both
/// one-sided limits are checked at every prime (the extrema of theta(x)/x
/// and of the Mertens deviation sit at primes and just below them), plus
/// the endpoint x = limit.
ValidationReport validate_constants(double k1, double k2, double k3,
                                    std::uint64_t limit);

/// The default set k1=0.2, k2=1.39, k3=2.0 validated over [2, limit];
/// throws ConstantValidationError naming the witness if a default fails.
BaseConstants estimate_base_constants(std::uint64_t limit);

/// Largest root >= 2 of x - 1 = 2 x^(1/x + (2-eps)/2), by doubling bracket
/// (cap 1e9) plus bisection. Throws SolverError if f < 0 still at the cap.
double solve_n_epsilon(double epsilon);

/// Same with exponent 1/(x-1) + (2-eps)/2.
double solve_m_epsilon(double epsilon);

/// eps together with the thresholds and the constant
/// k_eps = k4 / 2^(5 pi(N_eps) + 6 pi(M_eps)).
struct EpsilonPlan {
    double epsilon = 0.0;
    double n_eps = 0.0;
    double m_eps = 0.0;
    std::uint64_t pi_n = 0;
    std::uint64_t pi_m = 0;
    double k_eps = 0.0;      // may underflow to 0 for tiny eps
    double log_k_eps = 0.0;  // log k4 - (5 pi_n + 6 pi_m) log 2
    double k4 = 0.0;
};

EpsilonPlan make_epsilon_plan(double epsilon, const BaseConstants& constants);

/// log F(q, alpha) with F = q^(2 alpha - 1 - (2/phi(c)) E_c(q)) ((q-1)/2)^2.
/// Requires q^alpha || c.
double f_factor(std::uint64_t q, std::uint32_t alpha, const Factorization& c);

/// The four mutually exclusive prime-power classes of c:
///   w1: alpha >= 2, q <= [N_eps]      w2: alpha >= 2, q >= [N_eps]+1
///   w3: alpha  = 1, q <= [M_eps]      w4: alpha  = 1, q >= [M_eps]+1
struct ClassCounts {
    std::uint32_t w1 = 0;
    std::uint32_t w2 = 0;
    std::uint32_t w3 = 0;
    std::uint32_t w4 = 0;

    std::uint32_t total() const { return w1 + w2 + w3 + w4; }
};

ClassCounts classify_factors(const Factorization& c, const EpsilonPlan& plan);

/// log(k4 * prod F(q_i, alpha_i)); the geometric mean exceeds this.
double theorem2_lower(const Factorization& c, const BaseConstants& constants);

/// log(k5 * k6^(3^omega) * R(c) * c^2); the geometric mean stays below it.
/// Throws OverflowError (naming omega) if 3^omega log k6 leaves double range.
double theorem5_upper(const Factorization& c, const BaseConstants& constants);

/// Bracket outcome in log space; satisfied means strictly inside with
/// margin above kMarginTol on each finite side.
struct BoundCheck {
    double log_lower = 0.0;
    double log_value = 0.0;
    double log_upper = 0.0;
    bool satisfied = false;
    double margin = 0.0;  // min of the finite gaps

    friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

/// Lower side only: log k_eps + (1 - eps) log R(c) + 2 log c against the
/// report's log geometric mean.
BoundCheck theorem3_check(const Factorization& c, const EpsilonPlan& plan,
                          const GcReport& report);

/// Two-sided bracket max(theorem2, theorem3) < log GM < theorem5.
BoundCheck bound_chain_check(const Factorization& c, const GcReport& report,
                             const BaseConstants& constants,
                             const EpsilonPlan& plan);

}  // namespace radlab
