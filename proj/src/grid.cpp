#include "hinfsyn/grid.hpp"

#include <algorithm>
#include <cmath>

#include "hinfsyn/errors.hpp"

namespace hinfsyn {

FrequencyGrid::FrequencyGrid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty())
        throw InvalidParams("frequency grid must be nonempty");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i]) || points_[i] < 0.0)
            throw InvalidParams("frequency grid points must be finite and >= 0");
        if (i > 0 && points_[i] <= points_[i - 1])
            throw InvalidParams("frequency grid points must be strictly increasing");
    }
}

FrequencyGrid FrequencyGrid::log_space(double w_min, double w_max, int n) {
    if (!(w_min > 0.0) || !(w_max > w_min) || n < 2)
        throw InvalidParams("log grid needs 0 < w_min < w_max and n >= 2");
    std::vector<double> pts(static_cast<std::size_t>(n));
    const double ratio = std::log(w_max / w_min);
    for (int i = 0; i < n; ++i)
        pts[static_cast<std::size_t>(i)] = w_min * std::exp(ratio * i / (n - 1));
    pts.back() = w_max;
    return FrequencyGrid(std::move(pts));
}

FrequencyGrid FrequencyGrid::refined_around(const std::vector<std::size_t>& centers,
                                            int factor) const {
    std::vector<double> pts = points_;
    for (std::size_t c : centers) {
        const std::size_t lo = c > 0 ? c - 1 : c;
        const std::size_t hi = c + 1 < points_.size() ? c + 1 : c;
        if (lo == hi)
            continue;
        const double a = points_[lo];
        const double b = points_[hi];
        const int n = 2 * factor;
        if (a > 0.0) {
            const double ratio = std::log(b / a);
            for (int i = 1; i < n; ++i)
                pts.push_back(a * std::exp(ratio * i / n));
        } else { // bracket starts at w = 0: fall back to linear spacing
            for (int i = 1; i < n; ++i)
                pts.push_back(a + (b - a) * i / n);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return FrequencyGrid(std::move(pts));
}

FrequencyGrid default_grid(const GridOptions& opts) {
    return FrequencyGrid::log_space(opts.w_min, opts.w_max, opts.base_points);
}

} // namespace hinfsyn
