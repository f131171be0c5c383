#pragma once

#include <cstddef>
#include <vector>

namespace hinfsyn {

// Ordered set of angular frequencies (rad/s), strictly increasing, all >= 0.
class FrequencyGrid {
public:
    explicit FrequencyGrid(std::vector<double> points);

    static FrequencyGrid log_space(double w_min, double w_max, int n);

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }

    // Union with `factor`-times denser log-spaced points across the bracket
    // [points[i-1], points[i+1]] of each given center index.
    FrequencyGrid refined_around(const std::vector<std::size_t>& centers, int factor) const;

private:
    std::vector<double> points_;
};

struct GridOptions {
    double w_min = 1e-3;
    double w_max = 1e4;
    int base_points = 2000;
    int refine_factor = 10;
};

// Base grid of the default sweep policy: log-spaced from w_min to w_max.
FrequencyGrid default_grid(const GridOptions& opts = {});

} // namespace hinfsyn
