#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "radlab/bounds.hpp"
#include "radlab/partitions.hpp"
#include "radlab/sieve.hpp"

namespace radlab {

enum class CheckKind : int {
    PartitionCount = 0,
    GcDualEngine,
    AllPartitionsIdentity,
    CorollaryIdentity,
    EcOracle,
    Lemma1Envelope,
    Lemma2Floor,
    Lemma3Identity,
    Lemma4Identity,
    Theorem2Lower,
    Theorem3Lower,
    Theorem5Upper,
    Step1FactorBound,
    Step2FactorBound,
    ClassCountSplit,
    WitnessNonempty,
    StrengthComparison,
    InternalError,
    kCount,
};

constexpr std::size_t kNumCheckKinds =
    static_cast<std::size_t>(CheckKind::kCount);

/// Stable output name of a check kind (used in reports and JSON).
const char* check_kind_name(CheckKind kind);

struct CheckFailure {
    std::uint64_t c = 0;
    CheckKind kind = CheckKind::InternalError;
    std::string details;

    friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

struct ScanResult {
    std::uint64_t c_min = 0;
    std::uint64_t c_max = 0;
    std::array<std::uint64_t, kNumCheckKinds> checks_run{};
    std::vector<CheckFailure> failures;
    std::vector<CheckFailure> findings;  // observations, not failures
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    std::uint64_t min_ratio_c = 0;
    std::uint64_t max_ratio_c = 0;

    bool passed() const { return failures.empty(); }

    friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

/// Run every identity and bound check for each c in [c_min, c_max]:
/// dual-engine G_c equality, the all-partitions and divisor-product
/// identities, the E_c oracle and envelope over all integer 1 <= x < c,
/// the per-factor identities, and the bound chain for each plan. Results
/// are merged in ascending c, so the output is identical for any worker
/// count.
ScanResult verify_range(std::uint64_t c_min, std::uint64_t c_max,
                        const SpfTable& table, const BaseConstants& constants,
                        std::span<const EpsilonPlan> plans, int workers);

/// Plain-loop reference implementation of verify_range; no OpenMP.
ScanResult verify_range_serial(std::uint64_t c_min, std::uint64_t c_max,
                               const SpfTable& table,
                               const BaseConstants& constants,
                               std::span<const EpsilonPlan> plans);

/// GcReports for every c in [c_min, c_max], ascending, OpenMP across c.
std::vector<GcReport> scan_reports(std::uint64_t c_min, std::uint64_t c_max,
                                   const SpfTable& table, int workers);

/// Serial reference for scan_reports.
std::vector<GcReport> scan_reports_serial(std::uint64_t c_min,
                                          std::uint64_t c_max,
                                          const SpfTable& table);

struct WitnessEntry {
    CoprimePartition partition;
    double log_radical = 0.0;  // log R(a b c)

    friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

/// The partitions whose radical reaches the geometric mean (never empty:
/// the maximum does), with the lower bounds they consequently beat.
struct WitnessReport {
    std::uint64_t c = 0;
    double epsilon = 0.0;
    std::vector<WitnessEntry> witnesses;
    double geo_mean_log = 0.0;
    double thm_lower_log = 0.0;  // log k_eps + (1-eps) log R(c) + 2 log c
    double abc_lower_log = 0.0;  // (1/(1+eps)) log c
};

WitnessReport theorem4_witnesses(std::uint64_t c, const SpfTable& table,
                                 const EpsilonPlan& plan);

/// log c / log R(abc); values above 1 mark exceptional triples.
double abc_quality(const CoprimePartition& p, const SpfTable& table);

struct FixedRadicalPoint {
    std::vector<std::uint32_t> exponents;
    std::uint64_t c = 0;
    double ratio = 0.0;  // G_c^(2/phi) / (R c^2)

    friend bool operator==(const FixedRadicalPoint&,
                           const FixedRadicalPoint&) = default;
};

/// Ratio survey over c = prod q_i^(x_i), 1 <= x_i <= cap: every point must
/// sit inside [k_eps R^(-eps), k5 k6^(3^omega)]; violations are recorded.
struct FixedRadicalResult {
    std::vector<std::uint64_t> primes;
    std::uint32_t exponent_cap = 0;
    double epsilon = 0.0;
    double log_lower = 0.0;  // log k_eps - eps log R
    double log_upper = 0.0;  // log k5 + 3^omega log k6
    std::vector<FixedRadicalPoint> points;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    std::vector<std::string> bracket_violations;

    bool passed() const { return bracket_violations.empty(); }
};

FixedRadicalResult fixed_radical_scan(const std::vector<std::uint64_t>& primes,
                                      std::uint32_t exponent_cap,
                                      const SpfTable& table,
                                      const EpsilonPlan& plan,
                                      const BaseConstants& constants);

}  // namespace radlab
