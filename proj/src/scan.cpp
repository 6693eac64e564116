#include "radlab/scan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "radlab/ec.hpp"
#include "radlab/errors.hpp"
#include "radlab/kahan.hpp"

namespace radlab {

const char* check_kind_name(CheckKind kind) {
    switch (kind) {
        case CheckKind::PartitionCount: return "partition-count";
        case CheckKind::GcDualEngine: return "gc-dual-engine";
        case CheckKind::AllPartitionsIdentity: return "all-partitions";
        case CheckKind::CorollaryIdentity: return "corollary";
        case CheckKind::EcOracle: return "ec-oracle";
        case CheckKind::Lemma1Envelope: return "lemma1-envelope";
        case CheckKind::Lemma2Floor: return "lemma2-floor";
        case CheckKind::Lemma3Identity: return "lemma3-identity";
        case CheckKind::Lemma4Identity: return "lemma4-identity";
        case CheckKind::Theorem2Lower: return "theorem2-lower";
        case CheckKind::Theorem3Lower: return "theorem3-lower";
        case CheckKind::Theorem5Upper: return "theorem5-upper";
        case CheckKind::Step1FactorBound: return "step1-factor-bound";
        case CheckKind::Step2FactorBound: return "step2-factor-bound";
        case CheckKind::ClassCountSplit: return "class-count-split";
        case CheckKind::WitnessNonempty: return "witness-nonempty";
        case CheckKind::StrengthComparison: return "strength-comparison";
        case CheckKind::InternalError: return "internal-error";
        case CheckKind::kCount: break;
    }
    return "unknown";
}

namespace {

struct PerC {
    std::array<std::uint64_t, kNumCheckKinds> counts{};
    std::vector<CheckFailure> failures;
    std::vector<CheckFailure> findings;
    double ratio = 0.0;
};

std::string describe_mismatch(const ExponentVector& a, const ExponentVector& b,
                              const char* an, const char* bn) {
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() && ib != b.entries().end()) {
        if (*ia == *ib) {
            ++ia;
            ++ib;
            continue;
        }
        break;
    }
    std::ostringstream os;
    os << an << " vs " << bn << " first differ near prime ";
    if (ia != a.entries().end())
        os << ia->first << " (" << an << " exp " << ia->second << ")";
    else if (ib != b.entries().end())
        os << ib->first << " (" << bn << " exp " << ib->second << ")";
    else
        os << "?";
    return os.str();
}

double log_radical(std::uint64_t n, const SpfTable& table) {
    double s = 0.0;
    while (n > 1) {
        const std::uint64_t p = table.spf(n);
        s += std::log(static_cast<double>(p));
        while (n % p == 0) n /= p;
    }
    return s;
}

class CheckRecorder {
public:
    CheckRecorder(PerC& out, std::uint64_t c) : out_(out), c_(c) {}

    void run(CheckKind kind, bool ok, const std::string& details) {
        ++out_.counts[static_cast<std::size_t>(kind)];
        if (!ok) out_.failures.push_back({c_, kind, details});
    }

    void finding(CheckKind kind, const std::string& details) {
        out_.findings.push_back({c_, kind, details});
    }

private:
    PerC& out_;
    std::uint64_t c_;
};

PerC check_one(std::uint64_t c, const SpfTable& table,
               const BaseConstants& constants,
               std::span<const EpsilonPlan> plans) {
    PerC out;
    CheckRecorder rec(out, c);

    const Factorization cf = table.factorize(c);
    const std::uint64_t phi = cf.phi();
    const double log_rad = std::log(static_cast<double>(cf.radical()));
    const double log_c = std::log(static_cast<double>(c));

    const auto parts = enumerate_coprime_partitions(c);
    rec.run(CheckKind::PartitionCount, parts.size() == phi / 2,
            "count " + std::to_string(parts.size()) + " != phi/2 = " +
                std::to_string(phi / 2));

    const ExponentVector g_brute = gc_bruteforce(c, table);
    const ExponentVector g_t1 = gc_theorem1(c, table);
    rec.run(CheckKind::GcDualEngine, g_t1 == g_brute,
            describe_mismatch(g_t1, g_brute, "theorem1", "bruteforce"));

    rec.run(CheckKind::AllPartitionsIdentity,
            all_partitions_product(c, table) ==
                all_partitions_bruteforce(c, table),
            "closed form differs from row-by-row product");

    const CorollarySides sides = corollary_product(c, table);
    rec.run(CheckKind::CorollaryIdentity, sides.equal(),
            describe_mismatch(sides.lhs, sides.rhs, "lhs", "rhs"));

    // E_c oracle and envelope over every integer 1 <= x < c. The oracle is
    // a plain gcd prefix count, nothing shared with the floor-sum path.
    std::vector<std::uint32_t> prefix(c + 1, 0);
    for (std::uint64_t n = 1; n <= c; ++n)
        prefix[n] = prefix[n - 1] + (std::gcd(n, c) == 1 ? 1 : 0);
    rec.run(CheckKind::EcOracle, prefix[c] == phi,
            "full-range coprime count != phi");

    std::uint64_t prev_value = ~std::uint64_t{0};
    for (std::uint64_t x = 1; x < c; ++x) {
        const EcBounds b = ec_bounds(cf, Rational(static_cast<std::int64_t>(x)));
        rec.run(CheckKind::EcOracle,
                b.value == prefix[c / x] && b.value <= prev_value,
                "x = " + std::to_string(x) + ": ec = " +
                    std::to_string(b.value) + ", oracle = " +
                    std::to_string(prefix[c / x]));
        rec.run(CheckKind::Lemma1Envelope, b.envelope_strict(),
                "x = " + std::to_string(x) + ": value " +
                    std::to_string(b.value) + " outside (" + b.lower.str() +
                    ", " + b.upper.str() + ")");
        rec.run(CheckKind::Lemma2Floor, b.floor_holds(),
                "x = " + std::to_string(x) + ": value " +
                    std::to_string(b.value) + " below " +
                    b.lemma2_lower.str());
        prev_value = b.value;
    }

    for (std::size_t i = 0; i < cf.factors().size(); ++i) {
        const auto& f = cf.factors()[i];
        const Rational direct(static_cast<std::int64_t>(
            ec(cf, Rational(static_cast<std::int64_t>(f.prime)))));
        if (f.exponent >= 2)
            rec.run(CheckKind::Lemma3Identity, direct == ec_lemma3(cf, i),
                    "q = " + std::to_string(f.prime) + ": E_c(q) != phi/q");
        else
            rec.run(CheckKind::Lemma4Identity, direct == ec_lemma4(cf, i),
                    "q = " + std::to_string(f.prime) +
                        ": E_c(q) != phi/(q-1) - E_{c/q}(q)");
    }

    const double log_gm = 2.0 * g_t1.log_value() / static_cast<double>(phi);
    out.ratio = std::exp(log_gm - log_rad - 2.0 * log_c);

    const double t2 = theorem2_lower(cf, constants);
    rec.run(CheckKind::Theorem2Lower, log_gm - t2 > kMarginTol,
            "margin " + std::to_string(log_gm - t2));
    const double t5 = theorem5_upper(cf, constants);
    rec.run(CheckKind::Theorem5Upper, t5 - log_gm > kMarginTol,
            "margin " + std::to_string(t5 - log_gm));

    // Witness basis: the largest partition radical reaches the geometric
    // mean of the radicals.
    KahanSum log_sum;
    double max_log = 0.0;
    for (const auto& p : parts) {
        const double lr = log_radical(p.a, table) + log_radical(p.b, table) +
                          log_radical(p.c, table);
        log_sum.add(lr);
        max_log = std::max(max_log, lr);
    }
    const double mean_log = log_sum.value() / static_cast<double>(parts.size());
    rec.run(CheckKind::WitnessNonempty,
            max_log >= mean_log - 1e-12 * std::max(1.0, std::abs(mean_log)),
            "max log radical " + std::to_string(max_log) +
                " fell below the mean " + std::to_string(mean_log));

    for (const auto& plan : plans) {
        const double t3 = plan.log_k_eps + (1.0 - plan.epsilon) * log_rad +
                          2.0 * log_c;
        rec.run(CheckKind::Theorem3Lower, log_gm - t3 > kMarginTol,
                "eps = " + std::to_string(plan.epsilon) + ": margin " +
                    std::to_string(log_gm - t3));

        for (const auto& f : cf.factors()) {
            const double lf = f_factor(f.prime, f.exponent, cf);
            const double lq = std::log(static_cast<double>(f.prime));
            if (f.exponent >= 2)
                rec.run(CheckKind::Step1FactorBound,
                        lf > std::log(1.0 / 32.0) +
                                 (2.0 * f.exponent + 1.0 - plan.epsilon) * lq,
                        "eps = " + std::to_string(plan.epsilon) +
                            ", q = " + std::to_string(f.prime));
            else
                rec.run(CheckKind::Step2FactorBound,
                        lf > std::log(1.0 / 64.0) +
                                 (3.0 - plan.epsilon) * lq,
                        "eps = " + std::to_string(plan.epsilon) +
                            ", q = " + std::to_string(f.prime));
        }

        const ClassCounts w = classify_factors(cf, plan);
        const bool split_ok = w.total() == cf.omega() && w.w1 <= plan.pi_n &&
                              w.w3 <= plan.pi_m;
        rec.run(CheckKind::ClassCountSplit, split_ok,
                "eps = " + std::to_string(plan.epsilon) + ": w = (" +
                    std::to_string(w.w1) + "," + std::to_string(w.w2) + "," +
                    std::to_string(w.w3) + "," + std::to_string(w.w4) + ")");
        // The strict forms w1 < pi(N), w3 < pi(M) can in principle touch
        // equality; surface those cases without failing the scan.
        if (split_ok && (w.w1 == plan.pi_n || w.w3 == plan.pi_m))
            rec.finding(CheckKind::ClassCountSplit,
                        "eps = " + std::to_string(plan.epsilon) +
                            ": class count touches pi bound (w1 = " +
                            std::to_string(w.w1) + ", w3 = " +
                            std::to_string(w.w3) + ")");

        rec.run(CheckKind::StrengthComparison,
                (1.0 - plan.epsilon) * log_rad + 2.0 * log_c >
                    log_c / (1.0 + plan.epsilon),
                "eps = " + std::to_string(plan.epsilon));
    }

    return out;
}

ScanResult merge_outcomes(std::uint64_t c_min, std::uint64_t c_max,
                          std::vector<PerC>&& outs) {
    ScanResult result;
    result.c_min = c_min;
    result.c_max = c_max;
    bool first = true;
    for (std::size_t i = 0; i < outs.size(); ++i) {
        PerC& o = outs[i];
        for (std::size_t k = 0; k < kNumCheckKinds; ++k)
            result.checks_run[k] += o.counts[k];
        for (auto& f : o.failures) result.failures.push_back(std::move(f));
        for (auto& f : o.findings) result.findings.push_back(std::move(f));
        const std::uint64_t c = c_min + i;
        if (first || o.ratio < result.min_ratio) {
            result.min_ratio = o.ratio;
            result.min_ratio_c = c;
        }
        if (first || o.ratio > result.max_ratio) {
            result.max_ratio = o.ratio;
            result.max_ratio_c = c;
        }
        first = false;
    }
    return result;
}

void require_scan_range(std::uint64_t c_min, std::uint64_t c_max,
                        const SpfTable& table) {
    if (c_min < 3 || c_min > c_max)
        throw std::invalid_argument("scan range must satisfy 3 <= cMin <= cMax");
    if (c_max > table.limit())
        throw std::invalid_argument("scan range exceeds the sieve limit");
}

}  // namespace

ScanResult verify_range(std::uint64_t c_min, std::uint64_t c_max,
                        const SpfTable& table, const BaseConstants& constants,
                        std::span<const EpsilonPlan> plans, int workers) {
    require_scan_range(c_min, c_max, table);
    if (workers < 1)
        throw std::invalid_argument("verify_range: workers must be >= 1");

    const std::int64_t n = static_cast<std::int64_t>(c_max - c_min + 1);
    std::vector<PerC> outs(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::uint64_t c = c_min + static_cast<std::uint64_t>(i);
        try {
            outs[static_cast<std::size_t>(i)] =
                check_one(c, table, constants, plans);
        } catch (const std::exception& e) {
            PerC bad;
            ++bad.counts[static_cast<std::size_t>(CheckKind::InternalError)];
            bad.failures.push_back({c, CheckKind::InternalError, e.what()});
            outs[static_cast<std::size_t>(i)] = std::move(bad);
        }
    }
    return merge_outcomes(c_min, c_max, std::move(outs));
}

ScanResult verify_range_serial(std::uint64_t c_min, std::uint64_t c_max,
                               const SpfTable& table,
                               const BaseConstants& constants,
                               std::span<const EpsilonPlan> plans) {
    require_scan_range(c_min, c_max, table);
    const std::size_t n = static_cast<std::size_t>(c_max - c_min + 1);
    std::vector<PerC> outs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t c = c_min + i;
        try {
            outs[i] = check_one(c, table, constants, plans);
        } catch (const std::exception& e) {
            PerC bad;
            ++bad.counts[static_cast<std::size_t>(CheckKind::InternalError)];
            bad.failures.push_back({c, CheckKind::InternalError, e.what()});
            outs[i] = std::move(bad);
        }
    }
    return merge_outcomes(c_min, c_max, std::move(outs));
}

std::vector<GcReport> scan_reports(std::uint64_t c_min, std::uint64_t c_max,
                                   const SpfTable& table, int workers) {
    require_scan_range(c_min, c_max, table);
    if (workers < 1)
        throw std::invalid_argument("scan_reports: workers must be >= 1");
    const std::int64_t n = static_cast<std::int64_t>(c_max - c_min + 1);
    std::vector<GcReport> reports(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
    for (std::int64_t i = 0; i < n; ++i)
        reports[static_cast<std::size_t>(i)] =
            gc_report(c_min + static_cast<std::uint64_t>(i), table);
    return reports;
}

std::vector<GcReport> scan_reports_serial(std::uint64_t c_min,
                                          std::uint64_t c_max,
                                          const SpfTable& table) {
    require_scan_range(c_min, c_max, table);
    std::vector<GcReport> reports;
    reports.reserve(static_cast<std::size_t>(c_max - c_min + 1));
    for (std::uint64_t c = c_min; c <= c_max; ++c)
        reports.push_back(gc_report(c, table));
    return reports;
}

WitnessReport theorem4_witnesses(std::uint64_t c, const SpfTable& table,
                                 const EpsilonPlan& plan) {
    const Factorization cf = table.factorize(c);
    const auto parts = enumerate_coprime_partitions(c);

    std::vector<double> logs(parts.size());
    KahanSum sum;
    double max_log = 0.0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        logs[i] = log_radical(parts[i].a, table) +
                  log_radical(parts[i].b, table) +
                  log_radical(parts[i].c, table);
        sum.add(logs[i]);
        max_log = std::max(max_log, logs[i]);
    }

    WitnessReport report;
    report.c = c;
    report.epsilon = plan.epsilon;
    report.geo_mean_log = sum.value() / static_cast<double>(parts.size());
    // The maximum always qualifies; the min() only shields the filter from
    // a one-ulp wobble of the mean when all radicals coincide.
    const double threshold = std::min(report.geo_mean_log, max_log);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (logs[i] >= threshold) report.witnesses.push_back({parts[i], logs[i]});

    report.thm_lower_log =
        plan.log_k_eps +
        (1.0 - plan.epsilon) * std::log(static_cast<double>(cf.radical())) +
        2.0 * std::log(static_cast<double>(c));
    report.abc_lower_log =
        std::log(static_cast<double>(c)) / (1.0 + plan.epsilon);
    return report;
}

double abc_quality(const CoprimePartition& p, const SpfTable& table) {
    if (p.a + p.b != p.c || p.a >= p.b || std::gcd(p.a, p.b) != 1)
        throw std::invalid_argument("abc_quality: not a coprime partition");
    const double lr = log_radical(p.a, table) + log_radical(p.b, table) +
                      log_radical(p.c, table);
    return std::log(static_cast<double>(p.c)) / lr;
}

FixedRadicalResult fixed_radical_scan(const std::vector<std::uint64_t>& primes,
                                      std::uint32_t exponent_cap,
                                      const SpfTable& table,
                                      const EpsilonPlan& plan,
                                      const BaseConstants& constants) {
    if (primes.empty())
        throw std::invalid_argument("fixed_radical_scan: need at least one prime");
    if (exponent_cap < 1)
        throw std::invalid_argument("fixed_radical_scan: cap must be >= 1");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (primes[i] > table.limit() || !table.is_prime(primes[i]))
            throw std::invalid_argument("fixed_radical_scan: " +
                                        std::to_string(primes[i]) +
                                        " is not a prime in the table");
        if (i > 0 && primes[i] <= primes[i - 1])
            throw std::invalid_argument(
                "fixed_radical_scan: primes must be distinct and ascending");
    }

    const std::size_t w = primes.size();
    double log_r = 0.0;
    for (std::uint64_t p : primes) log_r += std::log(static_cast<double>(p));

    FixedRadicalResult result;
    result.primes = primes;
    result.exponent_cap = exponent_cap;
    result.epsilon = plan.epsilon;
    result.log_lower = plan.log_k_eps - plan.epsilon * log_r;
    result.log_upper = std::log(constants.k5) +
                       std::pow(3.0, static_cast<double>(w)) *
                           std::log(constants.k6);

    std::vector<std::uint32_t> expo(w, 1);
    bool first = true;
    while (true) {
        unsigned __int128 cx = 1;
        for (std::size_t i = 0; i < w; ++i)
            for (std::uint32_t e = 0; e < expo[i]; ++e) cx *= primes[i];
        std::ostringstream tuple;
        tuple << "(";
        for (std::size_t i = 0; i < w; ++i)
            tuple << (i ? "," : "") << expo[i];
        tuple << ")";
        if (cx > table.limit())
            throw std::out_of_range("fixed_radical_scan: tuple " + tuple.str() +
                                    " exceeds the table limit");
        const std::uint64_t c = static_cast<std::uint64_t>(cx);

        const GcReport report = gc_report(c, table);
        const double log_ratio = report.log_geo_mean - log_r -
                                 2.0 * std::log(static_cast<double>(c));
        result.points.push_back({expo, c, report.ratio});
        if (!(log_ratio >= result.log_lower && log_ratio <= result.log_upper))
            result.bracket_violations.push_back(
                "tuple " + tuple.str() + ": log ratio " +
                std::to_string(log_ratio) + " outside [" +
                std::to_string(result.log_lower) + ", " +
                std::to_string(result.log_upper) + "]");
        if (first || report.ratio < result.min_ratio)
            result.min_ratio = report.ratio;
        if (first || report.ratio > result.max_ratio)
            result.max_ratio = report.ratio;
        first = false;

        // Odometer over exponent tuples, rightmost digit fastest.
        std::size_t i = w;
        while (i > 0) {
            --i;
            if (expo[i] < exponent_cap) {
                ++expo[i];
                break;
            }
            expo[i] = 1;
            if (i == 0) return result;
        }
    }
}

}  // namespace radlab
