// Times the OpenMP range scans against their serial reference
// implementations and reports speedups. The parallel results are also
// compared with the serial ones, so a run doubles as a determinism check.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "radlab/bounds.hpp"
#include "radlab/scan.hpp"
#include "radlab/sieve.hpp"

using namespace radlab;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP scan benchmark"};
    std::uint64_t c_min = 3, c_max = 2000;
    std::uint64_t sieve_limit = 2'000'000;
    std::string mode = "verify";
    std::vector<int> workers{1, 2, 4, 8};
    app.add_option("--c-min", c_min)->capture_default_str();
    app.add_option("--c-max", c_max)->capture_default_str();
    app.add_option("--sieve-limit", sieve_limit)->capture_default_str();
    app.add_option("--mode", mode)->check(CLI::IsMember({"verify", "ratio"}));
    app.add_option("--workers", workers, "worker counts to time")
        ->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    if (c_min < 3 || c_min > c_max || c_max > sieve_limit) {
        std::fprintf(stderr, "bad range\n");
        return 2;
    }

    SpfTable table(sieve_limit);
    const BaseConstants constants = estimate_base_constants(sieve_limit);
    std::vector<EpsilonPlan> plans;
    for (double eps : {0.25, 0.5, 1.0})
        plans.push_back(make_epsilon_plan(eps, constants));

    std::printf("mode %s, c in [%llu, %llu], hardware threads %d\n",
                mode.c_str(), static_cast<unsigned long long>(c_min),
                static_cast<unsigned long long>(c_max), omp_get_max_threads());

    if (mode == "verify") {
        auto t0 = std::chrono::steady_clock::now();
        const ScanResult serial =
            verify_range_serial(c_min, c_max, table, constants, plans);
        const double serial_s = seconds_since(t0);
        std::printf("serial reference: %8.3f s  (%s)\n", serial_s,
                    serial.passed() ? "pass" : "FAIL");
        for (int w : workers) {
            t0 = std::chrono::steady_clock::now();
            const ScanResult parallel =
                verify_range(c_min, c_max, table, constants, plans, w);
            const double s = seconds_since(t0);
            std::printf("workers %2d:       %8.3f s  speedup %5.2fx  %s\n", w,
                        s, serial_s / s,
                        parallel == serial ? "matches serial"
                                           : "MISMATCH vs serial");
        }
    } else {
        auto t0 = std::chrono::steady_clock::now();
        const auto serial = scan_reports_serial(c_min, c_max, table);
        const double serial_s = seconds_since(t0);
        std::printf("serial reference: %8.3f s\n", serial_s);
        for (int w : workers) {
            t0 = std::chrono::steady_clock::now();
            const auto parallel = scan_reports(c_min, c_max, table, w);
            const double s = seconds_since(t0);
            std::printf("workers %2d:       %8.3f s  speedup %5.2fx  %s\n", w,
                        s, serial_s / s,
                        parallel == serial ? "matches serial"
                                           : "MISMATCH vs serial");
        }
    }
    return 0;
}
