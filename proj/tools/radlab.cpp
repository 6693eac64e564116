// Command-line front end: exact G_c computation, range verification of the
// product identities and bound chain, constant validation, epsilon plans,
// witness partitions, ratio scans and the fixed-radical survey.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage or
// configuration error, 3 internal error (solver failure, overflow).

#include <omp.h>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "radlab/bounds.hpp"
#include "radlab/errors.hpp"
#include "radlab/partitions.hpp"
#include "radlab/scan.hpp"
#include "radlab/sieve.hpp"

using nlohmann::ordered_json;
using namespace radlab;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOpts {
    std::uint64_t sieve_limit = 2'000'000;
    int workers = omp_get_max_threads();
    std::string format = "json";
    std::string output;
};

// Derived floating values are reported with 10 significant digits; exact
// integers (exponents, counts) pass through untouched.
double round10(double x) {
    if (!std::isfinite(x)) return x;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::strtod(buf, nullptr);
}

std::string num_str(double x) {
    const double r = round10(x);
    char buf[48];
    auto [ptr, err] = std::to_chars(buf, buf + sizeof buf, r);
    (void)err;
    return std::string(buf, ptr);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void write_payload(const GlobalOpts& g, const std::string& payload) {
    std::string path = g.output;
    if (path.empty())
        if (const char* env = std::getenv("RADLAB_OUTPUT")) path = env;
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output path: " + path);
    out << payload;
}

ordered_json exponent_vector_json(const ExponentVector& ev) {
    ordered_json obj = ordered_json::object();
    for (const auto& [p, e] : ev.entries()) obj[std::to_string(p)] = e;
    return obj;
}

std::string exponent_vector_flat(const ExponentVector& ev) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : ev.entries()) {
        if (!first) os << ' ';
        os << p << ':' << e;
        first = false;
    }
    return os.str();
}

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

void check_epsilon(double eps) {
    require(eps > 0.0 && eps < 2.0, "epsilon must lie in (0, 2), got " +
                                        std::to_string(eps));
}

BaseConstants default_constants(std::uint64_t sieve_limit) {
    return estimate_base_constants(std::max<std::uint64_t>(sieve_limit, 1000));
}

// ---------------------------------------------------------------- gc ----

int run_gc(const GlobalOpts& g, std::uint64_t c) {
    require(c >= 3, "gc: --c must be >= 3");
    require(c <= g.sieve_limit, "gc: --c exceeds --sieve-limit");
    SpfTable table(g.sieve_limit);
    const GcReport report = gc_report(c, table);
    const double geo_mean = std::exp(report.log_geo_mean);

    std::string payload;
    if (g.format == "json") {
        ordered_json j;
        j["c"] = report.c;
        j["numPartitions"] = report.num_partitions;
        j["gc"] = exponent_vector_json(report.gc);
        j["geoMean"] = round10(geo_mean);
        j["logGeoMean"] = round10(report.log_geo_mean);
        j["ratio"] = round10(report.ratio);
        payload = j.dump(2) + "\n";
    } else if (g.format == "csv") {
        std::ostringstream os;
        os << "c,numPartitions,gc,geoMean,logGeoMean,ratio\n";
        os << report.c << ',' << report.num_partitions << ','
           << csv_escape(exponent_vector_flat(report.gc)) << ','
           << num_str(geo_mean) << ',' << num_str(report.log_geo_mean) << ','
           << num_str(report.ratio) << '\n';
        payload = os.str();
    } else {
        std::ostringstream os;
        os << "c = " << report.c << "\n"
           << "partitions = " << report.num_partitions << "\n"
           << "G_c = " << exponent_vector_flat(report.gc) << "\n"
           << "geometric mean = " << num_str(geo_mean) << "\n"
           << "ratio to R(c)c^2 = " << num_str(report.ratio) << "\n";
        payload = os.str();
    }
    write_payload(g, payload);
    return 0;
}

// ------------------------------------------------------------ verify ----

ordered_json failure_json(const CheckFailure& f) {
    ordered_json j;
    j["c"] = f.c;
    j["check"] = check_kind_name(f.kind);
    j["details"] = f.details;
    return j;
}

int run_verify(const GlobalOpts& g, std::uint64_t c_min, std::uint64_t c_max,
               std::vector<double> epsilons) {
    require(c_min >= 3 && c_min <= c_max, "verify: need 3 <= c-min <= c-max");
    require(c_max <= g.sieve_limit, "verify: c-max exceeds --sieve-limit");
    require(g.workers >= 1, "verify: workers must be >= 1");
    if (epsilons.empty()) epsilons = {0.25, 0.5, 1.0};
    for (double eps : epsilons) check_epsilon(eps);

    SpfTable table(g.sieve_limit);
    const BaseConstants constants = default_constants(g.sieve_limit);
    std::vector<EpsilonPlan> plans;
    plans.reserve(epsilons.size());
    for (double eps : epsilons) plans.push_back(make_epsilon_plan(eps, constants));

    const ScanResult result =
        verify_range(c_min, c_max, table, constants, plans, g.workers);

    std::string payload;
    if (g.format == "json") {
        ordered_json j;
        j["cMin"] = result.c_min;
        j["cMax"] = result.c_max;
        j["epsilons"] = epsilons;
        j["sieveLimit"] = g.sieve_limit;
        j["workers"] = g.workers;
        ordered_json checks = ordered_json::object();
        for (std::size_t k = 0; k < kNumCheckKinds; ++k)
            if (result.checks_run[k] > 0)
                checks[check_kind_name(static_cast<CheckKind>(k))] =
                    result.checks_run[k];
        j["checksRun"] = checks;
        j["failures"] = ordered_json::array();
        for (const auto& f : result.failures) j["failures"].push_back(failure_json(f));
        j["findings"] = ordered_json::array();
        for (const auto& f : result.findings) j["findings"].push_back(failure_json(f));
        j["minRatio"] = {{"c", result.min_ratio_c}, {"value", round10(result.min_ratio)}};
        j["maxRatio"] = {{"c", result.max_ratio_c}, {"value", round10(result.max_ratio)}};
        j["pass"] = result.passed();
        payload = j.dump(2) + "\n";
    } else if (g.format == "csv") {
        std::ostringstream os;
        os << "check,count\n";
        for (std::size_t k = 0; k < kNumCheckKinds; ++k)
            if (result.checks_run[k] > 0)
                os << check_kind_name(static_cast<CheckKind>(k)) << ','
                   << result.checks_run[k] << '\n';
        payload = os.str();
    } else {
        std::ostringstream os;
        os << "verified c in [" << result.c_min << ", " << result.c_max
           << "], epsilons:";
        for (double e : epsilons) os << ' ' << num_str(e);
        os << "\n";
        for (std::size_t k = 0; k < kNumCheckKinds; ++k)
            if (result.checks_run[k] > 0)
                os << "  " << check_kind_name(static_cast<CheckKind>(k)) << ": "
                   << result.checks_run[k] << " checks\n";
        os << "min ratio " << num_str(result.min_ratio) << " at c = "
           << result.min_ratio_c << ", max ratio " << num_str(result.max_ratio)
           << " at c = " << result.max_ratio_c << "\n";
        for (const auto& f : result.failures)
            os << "FAILURE c = " << f.c << " [" << check_kind_name(f.kind)
               << "] " << f.details << "\n";
        for (const auto& f : result.findings)
            os << "finding c = " << f.c << " [" << check_kind_name(f.kind)
               << "] " << f.details << "\n";
        os << (result.passed() ? "PASS" : "FAIL") << "\n";
        payload = os.str();
    }
    write_payload(g, payload);
    return result.passed() ? 0 : 1;
}

// ---------------------------------------------------------- constants ----

int run_constants(const GlobalOpts& g, double k1, double k2, double k3,
                  std::uint64_t limit) {
    require(limit >= 100, "constants: --limit must be >= 100");
    const ValidationReport report = validate_constants(k1, k2, k3, limit);
    const BaseConstants k = BaseConstants::derive(k1, k2, k3, limit);

    std::string payload;
    if (g.format == "json") {
        ordered_json j;
        j["k1"] = k.k1;
        j["k2"] = k.k2;
        j["k3"] = k.k3;
        j["k4"] = round10(k.k4);
        j["k5"] = round10(k.k5);
        j["k6"] = round10(k.k6);
        j["validatedLimit"] = limit;
        j["valid"] = report.ok;
        j["violations"] = ordered_json::array();
        for (const auto& v : report.violations) {
            ordered_json vj;
            vj["constant"] = v.constant;
            vj["x"] = v.x;
            vj["details"] = v.details;
            j["violations"].push_back(vj);
        }
        payload = j.dump(2) + "\n";
    } else if (g.format == "csv") {
        std::ostringstream os;
        os << "key,value\n";
        os << "k1," << num_str(k.k1) << "\nk2," << num_str(k.k2) << "\nk3,"
           << num_str(k.k3) << "\nk4," << num_str(k.k4) << "\nk5,"
           << num_str(k.k5) << "\nk6," << num_str(k.k6) << "\nvalidatedLimit,"
           << limit << "\nvalid," << (report.ok ? "true" : "false") << '\n';
        payload = os.str();
    } else {
        std::ostringstream os;
        os << "k1 = " << num_str(k.k1) << ", k2 = " << num_str(k.k2)
           << ", k3 = " << num_str(k.k3) << "\n"
           << "k4 = " << num_str(k.k4) << ", k5 = " << num_str(k.k5)
           << ", k6 = " << num_str(k.k6) << "\n"
           << "scan over [2, " << limit << "]: "
           << (report.ok ? "all inequalities hold" : "VIOLATED") << "\n";
        for (const auto& v : report.violations)
            os << "  " << v.constant << " at x = " << num_str(v.x) << ": "
               << v.details << "\n";
        payload = os.str();
    }
    write_payload(g, payload);
    return report.ok ? 0 : 1;
}

// --------------------------------------------------------------- plan ----

int run_plan(const GlobalOpts& g, double epsilon) {
    check_epsilon(epsilon);
    const BaseConstants constants = default_constants(1'000'000);
    const EpsilonPlan plan = make_epsilon_plan(epsilon, constants);

    std::string payload;
    if (g.format == "json") {
        ordered_json j;
        j["epsilon"] = epsilon;
        j["nEps"] = round10(plan.n_eps);
        j["mEps"] = round10(plan.m_eps);
        j["piN"] = plan.pi_n;
        j["piM"] = plan.pi_m;
        j["kEps"] = round10(plan.k_eps);
        j["logKEps"] = round10(plan.log_k_eps);
        j["k4"] = round10(plan.k4);
        payload = j.dump(2) + "\n";
    } else if (g.format == "csv") {
        std::ostringstream os;
        os << "key,value\n"
           << "epsilon," << num_str(epsilon) << '\n'
           << "nEps," << num_str(plan.n_eps) << '\n'
           << "mEps," << num_str(plan.m_eps) << '\n'
           << "piN," << plan.pi_n << '\n'
           << "piM," << plan.pi_m << '\n'
           << "kEps," << num_str(plan.k_eps) << '\n'
           << "logKEps," << num_str(plan.log_k_eps) << '\n';
        payload = os.str();
    } else {
        std::ostringstream os;
        os << "epsilon = " << num_str(epsilon) << "\n"
           << "N_eps = " << num_str(plan.n_eps) << " (pi = " << plan.pi_n
           << ")\n"
           << "M_eps = " << num_str(plan.m_eps) << " (pi = " << plan.pi_m
           << ")\n"
           << "k_eps = k4 / 2^" << 5 * plan.pi_n + 6 * plan.pi_m << " = "
           << num_str(plan.k_eps) << " (log " << num_str(plan.log_k_eps)
           << ")\n";
        payload = os.str();
    }
    write_payload(g, payload);
    return 0;
}

// ------------------------------------------------------------ witness ----

int run_witness(const GlobalOpts& g, std::uint64_t c, double epsilon) {
    require(c >= 3, "witness: --c must be >= 3");
    require(c <= g.sieve_limit, "witness: --c exceeds --sieve-limit");
    check_epsilon(epsilon);
    SpfTable table(g.sieve_limit);
    const BaseConstants constants = default_constants(g.sieve_limit);
    const EpsilonPlan plan = make_epsilon_plan(epsilon, constants);
    const WitnessReport report = theorem4_witnesses(c, table, plan);

    std::string payload;
    if (g.format == "json") {
        ordered_json j;
        j["c"] = report.c;
        j["epsilon"] = report.epsilon;
        j["geoMeanLog"] = round10(report.geo_mean_log);
        j["thmLowerLog"] = round10(report.thm_lower_log);
        j["abcLowerLog"] = round10(report.abc_lower_log);
        j["witnesses"] = ordered_json::array();
        for (const auto& w : report.witnesses) {
            ordered_json wj;
            wj["a"] = w.partition.a;
            wj["b"] = w.partition.b;
            wj["logRadical"] = round10(w.log_radical);
            wj["abcQuality"] = round10(abc_quality(w.partition, table));
            j["witnesses"].push_back(wj);
        }
        payload = j.dump(2) + "\n";
    } else if (g.format == "csv") {
        std::ostringstream os;
        os << "a,b,logRadical,abcQuality\n";
        for (const auto& w : report.witnesses)
            os << w.partition.a << ',' << w.partition.b << ','
               << num_str(w.log_radical) << ','
               << num_str(abc_quality(w.partition, table)) << '\n';
        payload = os.str();
    } else {
        std::ostringstream os;
        os << "c = " << report.c << ", epsilon = " << num_str(report.epsilon)
           << "\n"
           << "log geometric mean = " << num_str(report.geo_mean_log) << "\n"
           << "theorem lower bound (log) = " << num_str(report.thm_lower_log)
           << "\n"
           << "abc-form lower bound (log) = " << num_str(report.abc_lower_log)
           << "\n";
        for (const auto& w : report.witnesses)
            os << "  " << w.partition.a << " + " << w.partition.b << " = "
               << report.c << "   log R(abc) = " << num_str(w.log_radical)
               << "\n";
        payload = os.str();
    }
    write_payload(g, payload);
    return report.witnesses.empty() ? 1 : 0;
}

// --------------------------------------------------------- scan-ratio ----

int run_scan_ratio(const GlobalOpts& g, std::uint64_t c_min,
                   std::uint64_t c_max) {
    require(c_min >= 3 && c_min <= c_max,
            "scan-ratio: need 3 <= c-min <= c-max");
    require(c_max <= g.sieve_limit, "scan-ratio: c-max exceeds --sieve-limit");
    SpfTable table(g.sieve_limit);
    const auto reports = scan_reports(c_min, c_max, table, g.workers);

    std::size_t min_i = 0, max_i = 0;
    for (std::size_t i = 1; i < reports.size(); ++i) {
        if (reports[i].ratio < reports[min_i].ratio) min_i = i;
        if (reports[i].ratio > reports[max_i].ratio) max_i = i;
    }

    std::string payload;
    if (g.format == "json") {
        ordered_json j;
        j["cMin"] = c_min;
        j["cMax"] = c_max;
        j["rows"] = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json row;
            row["c"] = r.c;
            row["numPartitions"] = r.num_partitions;
            row["geoMean"] = round10(std::exp(r.log_geo_mean));
            row["logGeoMean"] = round10(r.log_geo_mean);
            row["ratio"] = round10(r.ratio);
            j["rows"].push_back(row);
        }
        j["minRatio"] = {{"c", reports[min_i].c},
                         {"value", round10(reports[min_i].ratio)}};
        j["maxRatio"] = {{"c", reports[max_i].c},
                         {"value", round10(reports[max_i].ratio)}};
        payload = j.dump(2) + "\n";
    } else if (g.format == "csv") {
        std::ostringstream os;
        os << "c,numPartitions,geoMean,logGeoMean,ratio\n";
        for (const auto& r : reports)
            os << r.c << ',' << r.num_partitions << ','
               << num_str(std::exp(r.log_geo_mean)) << ','
               << num_str(r.log_geo_mean) << ',' << num_str(r.ratio) << '\n';
        payload = os.str();
    } else {
        std::ostringstream os;
        os << "c in [" << c_min << ", " << c_max << "]\n";
        os << "min ratio " << num_str(reports[min_i].ratio) << " at c = "
           << reports[min_i].c << "\n";
        os << "max ratio " << num_str(reports[max_i].ratio) << " at c = "
           << reports[max_i].c << "\n";
        payload = os.str();
    }
    write_payload(g, payload);
    return 0;
}

// ------------------------------------------------------ fixed-radical ----

int run_fixed_radical(const GlobalOpts& g, std::vector<std::uint64_t> primes,
                      std::uint32_t cap, double epsilon) {
    require(!primes.empty(), "fixed-radical: need --primes");
    check_epsilon(epsilon);
    SpfTable table(g.sieve_limit);
    const BaseConstants constants = default_constants(g.sieve_limit);
    const EpsilonPlan plan = make_epsilon_plan(epsilon, constants);
    const FixedRadicalResult result =
        fixed_radical_scan(primes, cap, table, plan, constants);

    std::uint64_t radical = 1;
    for (std::uint64_t p : primes) radical *= p;

    std::string payload;
    if (g.format == "json") {
        ordered_json j;
        j["primes"] = primes;
        j["exponentCap"] = cap;
        j["epsilon"] = epsilon;
        j["radical"] = radical;
        j["logLower"] = round10(result.log_lower);
        j["logUpper"] = round10(result.log_upper);
        j["minRatio"] = round10(result.min_ratio);
        j["maxRatio"] = round10(result.max_ratio);
        j["points"] = ordered_json::array();
        for (const auto& pt : result.points) {
            ordered_json pj;
            pj["exponents"] = pt.exponents;
            pj["c"] = pt.c;
            pj["ratio"] = round10(pt.ratio);
            j["points"].push_back(pj);
        }
        j["violations"] = result.bracket_violations;
        j["pass"] = result.passed();
        payload = j.dump(2) + "\n";
    } else if (g.format == "csv") {
        std::ostringstream os;
        os << "exponents,c,ratio\n";
        for (const auto& pt : result.points) {
            std::ostringstream ex;
            for (std::size_t i = 0; i < pt.exponents.size(); ++i)
                ex << (i ? ";" : "") << pt.exponents[i];
            os << csv_escape(ex.str()) << ',' << pt.c << ','
               << num_str(pt.ratio) << '\n';
        }
        payload = os.str();
    } else {
        std::ostringstream os;
        os << "radical " << radical << ", cap " << cap << ", epsilon "
           << num_str(epsilon) << "\n"
           << "bracket (log): [" << num_str(result.log_lower) << ", "
           << num_str(result.log_upper) << "]\n"
           << "ratio range: [" << num_str(result.min_ratio) << ", "
           << num_str(result.max_ratio) << "] over " << result.points.size()
           << " points\n";
        for (const auto& v : result.bracket_violations)
            os << "VIOLATION " << v << "\n";
        os << (result.passed() ? "PASS" : "FAIL") << "\n";
        payload = os.str();
    }
    write_payload(g, payload);
    return result.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "radlab: exact radical products over coprime partitions, their "
        "geometric means, and the bound chain around them"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--sieve-limit", g.sieve_limit,
                   "smallest-prime-factor table limit")
        ->capture_default_str();
    app.add_option("--workers", g.workers, "worker threads for range scans")
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--output", g.output,
                   "write the report to this path (default stdout; the "
                   "RADLAB_OUTPUT environment variable overrides the default)");

    auto* gc_cmd = app.add_subcommand("gc", "exact G_c with geometric mean");
    std::uint64_t gc_c = 0;
    gc_cmd->add_option("--c", gc_c, "target c (>= 3)")->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "run every identity and bound check");
    std::uint64_t v_cmin = 3, v_cmax = 2000;
    std::vector<double> v_eps;
    verify_cmd->add_option("--c-min", v_cmin)->capture_default_str();
    verify_cmd->add_option("--c-max", v_cmax)->capture_default_str();
    verify_cmd->add_option("--epsilon", v_eps,
                           "epsilon values (default 0.25 0.5 1.0)");

    auto* const_cmd =
        app.add_subcommand("constants", "validate the absolute constants");
    double c_k1 = 0.2, c_k2 = 1.39, c_k3 = 2.0;
    std::uint64_t c_limit = 1'000'000;
    const_cmd->add_option("--k1", c_k1)->capture_default_str();
    const_cmd->add_option("--k2", c_k2)->capture_default_str();
    const_cmd->add_option("--k3", c_k3)->capture_default_str();
    const_cmd->add_option("--limit", c_limit)->capture_default_str();

    auto* plan_cmd =
        app.add_subcommand("plan", "thresholds N_eps, M_eps and k_eps");
    double p_eps = 0.5;
    plan_cmd->add_option("--epsilon", p_eps)->capture_default_str();

    auto* wit_cmd =
        app.add_subcommand("witness", "partitions reaching the geometric mean");
    std::uint64_t w_c = 0;
    double w_eps = 0.5;
    wit_cmd->add_option("--c", w_c, "target c (>= 3)")->required();
    wit_cmd->add_option("--epsilon", w_eps)->capture_default_str();

    auto* ratio_cmd =
        app.add_subcommand("scan-ratio", "geometric-mean ratio per c");
    std::uint64_t r_cmin = 3, r_cmax = 2000;
    ratio_cmd->add_option("--c-min", r_cmin)->capture_default_str();
    ratio_cmd->add_option("--c-max", r_cmax)->capture_default_str();

    auto* fixed_cmd = app.add_subcommand(
        "fixed-radical", "ratio bracket over a fixed-radical exponent grid");
    std::vector<std::uint64_t> f_primes{2, 3};
    std::uint32_t f_cap = 6;
    double f_eps = 0.5;
    fixed_cmd->add_option("--primes", f_primes, "distinct primes (comma list)")
        ->delimiter(',')
        ->capture_default_str();
    fixed_cmd->add_option("--cap", f_cap)->capture_default_str();
    fixed_cmd->add_option("--epsilon", f_eps)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gc_cmd->parsed()) return run_gc(g, gc_c);
        if (verify_cmd->parsed()) return run_verify(g, v_cmin, v_cmax, v_eps);
        if (const_cmd->parsed())
            return run_constants(g, c_k1, c_k2, c_k3, c_limit);
        if (plan_cmd->parsed()) return run_plan(g, p_eps);
        if (wit_cmd->parsed()) return run_witness(g, w_c, w_eps);
        if (ratio_cmd->parsed()) return run_scan_ratio(g, r_cmin, r_cmax);
        if (fixed_cmd->parsed())
            return run_fixed_radical(g, f_primes, f_cap, f_eps);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConstantValidationError& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    } catch (const SolverError& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 3;
    } catch (const OverflowError& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 3;
    }
}
