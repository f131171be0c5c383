#include "hinfsyn/norm.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hinfsyn/errors.hpp"

namespace hinfsyn {

namespace {

// Runs body(i) for i in [0, n), with exceptions captured inside the parallel
// region and rethrown once afterwards (the first one wins).
template <typename Body>
void parallel_for(std::size_t n, int threads, const Body& body) {
#ifdef _OPENMP
    if (threads != 1) {
        const int nt = threads <= 0 ? omp_get_max_threads() : threads;
        std::exception_ptr err = nullptr;
#pragma omp parallel for num_threads(nt) schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(hinfsyn_parallel_for_err)
                if (!err)
                    err = std::current_exception();
            }
        }
        if (err)
            std::rethrow_exception(err);
        return;
    }
#else
    (void)threads;
#endif
    for (std::size_t i = 0; i < n; ++i)
        body(i);
}

} // namespace

std::vector<double> magnitudes_serial(const TransferFn& f, const FrequencyGrid& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out[i] = std::abs(f(Complex(0.0, grid[i])));
    return out;
}

std::vector<double> magnitudes(const TransferFn& f, const FrequencyGrid& grid, int threads) {
    std::vector<double> out(grid.size());
    parallel_for(grid.size(), threads,
                 [&](std::size_t i) { out[i] = std::abs(f(Complex(0.0, grid[i]))); });
    return out;
}

std::vector<double> stacked_magnitudes_serial(const TransferFn& f1, const TransferFn& f2,
                                              const FrequencyGrid& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Complex s(0.0, grid[i]);
        out[i] = std::hypot(std::abs(f1(s)), std::abs(f2(s)));
    }
    return out;
}

std::vector<double> stacked_magnitudes(const TransferFn& f1, const TransferFn& f2,
                                       const FrequencyGrid& grid, int threads) {
    std::vector<double> out(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        const Complex s(0.0, grid[i]);
        out[i] = std::hypot(std::abs(f1(s)), std::abs(f2(s)));
    });
    return out;
}

double hinf_norm_on_grid(const TransferFn& f, const FrequencyGrid& grid, int threads) {
    const auto mags = magnitudes(f, grid, threads);
    return *std::max_element(mags.begin(), mags.end());
}

double hinf_norm_on_grid(const TransferFn& f1, const TransferFn& f2, const FrequencyGrid& grid,
                         int threads) {
    const auto mags = stacked_magnitudes(f1, f2, grid, threads);
    return *std::max_element(mags.begin(), mags.end());
}

std::vector<std::size_t> local_maxima(const std::vector<double>& values) {
    std::vector<std::size_t> idx;
    const std::size_t n = values.size();
    if (n == 1)
        return {0};
    for (std::size_t i = 0; i < n; ++i) {
        const bool left_ok = i == 0 ? values[0] > values[1] : values[i] >= values[i - 1];
        const bool right_ok = i + 1 == n ? values[n - 1] > values[n - 2] : values[i] >= values[i + 1];
        if (left_ok && right_ok)
            idx.push_back(i);
    }
    return idx;
}

namespace {

template <typename Mags>
double refined_sup(const Mags& eval, const GridOptions& opts) {
    const FrequencyGrid base = default_grid(opts);
    const auto mags = eval(base);
    const auto peaks = local_maxima(mags);
    const FrequencyGrid fine = base.refined_around(peaks, opts.refine_factor);
    const auto fine_mags = eval(fine);
    return std::max(*std::max_element(mags.begin(), mags.end()),
                    *std::max_element(fine_mags.begin(), fine_mags.end()));
}

} // namespace

double hinf_norm(const TransferFn& f, const GridOptions& opts, int threads) {
    return refined_sup([&](const FrequencyGrid& g) { return magnitudes(f, g, threads); }, opts);
}

double hinf_norm_stacked(const TransferFn& f1, const TransferFn& f2, const GridOptions& opts,
                         int threads) {
    return refined_sup(
        [&](const FrequencyGrid& g) { return stacked_magnitudes(f1, f2, g, threads); }, opts);
}

} // namespace hinfsyn
