// Compares the serial reference grid kernels against the OpenMP variants on the
// worked example plant: gamma scan (one 4x4 SVD per point) and the stacked
// closed-loop magnitude sweep. Results must match bitwise; timings and speedup
// are printed as a table.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hinfsyn/controller.hpp"
#include "hinfsyn/verify.hpp"

using namespace hinfsyn;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        fn();
        const auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* kernel, std::size_t points, double serial_ms, double parallel_ms,
            bool equal) {
    std::printf("%-22s %8zu %12.2f %12.2f %9.2fx  %s\n", kernel, points, serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "results equal" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int scan_points = 20000;
    int grid_points = 200000;
    int threads = 0; // all cores
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--scan-points")
            scan_points = std::atoi(argv[i + 1]);
        else if (flag == "--grid-points")
            grid_points = std::atoi(argv[i + 1]);
        else if (flag == "--threads")
            threads = std::atoi(argv[i + 1]);
    }

    const PlantParams plant{2.0, 3.0, 1.0, 0.5};
    const WeightConfig weights{0.5, 0.1, 0.4};
    const PlantFactorization fact = factor_plant(plant);

#ifdef _OPENMP
    const int nt = threads <= 0 ? omp_get_max_threads() : threads;
#else
    const int nt = 1;
#endif
    std::printf("threads: %d\n", nt);
    std::printf("%-22s %8s %12s %12s %10s\n", "kernel", "points", "serial ms", "parallel ms",
                "speedup");

    {
        const auto [lo, hi] = admissible_interval(weights);
        std::vector<double> gammas(static_cast<std::size_t>(scan_points));
        for (int i = 0; i < scan_points; ++i)
            gammas[static_cast<std::size_t>(i)] =
                lo + (hi - lo) * (i + 1) / (scan_points + 1);
        std::vector<double> serial, parallel;
        const double ts = time_ms([&] { serial = scan_sigma_ratio_serial(fact, weights, gammas); });
        const double tp = time_ms([&] { parallel = scan_sigma_ratio(fact, weights, gammas, threads); });
        report("gamma_scan", gammas.size(), ts, tp, serial == parallel);
    }

    {
        const GammaSearchResult res = find_gamma_opt(fact, weights, {.threads = threads});
        const Controller ctl = synthesize(fact, weights, res);
        const TransferFn cf = controller_fn(ctl);
        const TransferFn f1 = weighted_sensitivity(fact, cf, weights);
        const TransferFn f2 = weighted_complementary(fact, cf, weights);
        const FrequencyGrid grid = FrequencyGrid::log_space(1e-3, 1e4, grid_points);
        std::vector<double> serial, parallel;
        const double ts = time_ms([&] { serial = stacked_magnitudes_serial(f1, f2, grid); });
        const double tp = time_ms([&] { parallel = stacked_magnitudes(f1, f2, grid, threads); });
        report("stacked_magnitudes", grid.size(), ts, tp, serial == parallel);
    }

    return 0;
}
