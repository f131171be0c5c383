#pragma once

#include "hinfsyn/grid.hpp"
#include "hinfsyn/transfer.hpp"

namespace hinfsyn {

// Grid sweep kernels. Every kernel has a plain serial reference implementation
// (suffix _serial) and an OpenMP variant taking a thread count; threads == 1
// runs the serial path, threads <= 0 uses all available threads. The parallel
// variants return bitwise-identical results to the serial ones.

std::vector<double> magnitudes_serial(const TransferFn& f, const FrequencyGrid& grid);
std::vector<double> magnitudes(const TransferFn& f, const FrequencyGrid& grid, int threads);

// Pointwise sqrt(|f1|^2 + |f2|^2) of a stacked two-block response.
std::vector<double> stacked_magnitudes_serial(const TransferFn& f1, const TransferFn& f2,
                                              const FrequencyGrid& grid);
std::vector<double> stacked_magnitudes(const TransferFn& f1, const TransferFn& f2,
                                       const FrequencyGrid& grid, int threads);

// Supremum over the given grid only (no refinement).
double hinf_norm_on_grid(const TransferFn& f, const FrequencyGrid& grid, int threads = 1);
double hinf_norm_on_grid(const TransferFn& f1, const TransferFn& f2, const FrequencyGrid& grid,
                         int threads = 1);

// Indices of local maxima of the sampled values (non-strict at plateaus,
// endpoints included when they top their single neighbor).
std::vector<std::size_t> local_maxima(const std::vector<double>& values);

// Default sweep policy: log base grid, one refinement pass with refine_factor
// times the density around every detected local maximum, supremum over the union.
double hinf_norm(const TransferFn& f, const GridOptions& opts = {}, int threads = 1);
double hinf_norm_stacked(const TransferFn& f1, const TransferFn& f2, const GridOptions& opts = {},
                         int threads = 1);

} // namespace hinfsyn
