#pragma once

#include <array>
#include <utility>

#include "hinfsyn/plant.hpp"
#include "hinfsyn/svd.hpp"

namespace hinfsyn {

// Mixed-sensitivity weights W1(s) = rho, W2(s) = (1 + alpha s)/(beta + s).
struct WeightConfig {
    double rho = 0.0;
    double alpha = 0.0;
    double beta = 0.0;

    void validate() const;
};

// gamma-dependent quantities of the synthesis procedure:
//   a_gamma = sqrt(1 + rho^2 beta^2 - rho^2 gamma^{-2})
//   b_gamma = sqrt((1 - rho^2 gamma^{-2}) alpha^2 + rho^2)
//   omega_gamma = sqrt((1 - gamma^2 beta^2)/(gamma^2 - alpha^2))
//   f_gamma(s) = gamma (beta - s)/(a_gamma + b_gamma s)
struct GammaScalars {
    double gamma = 0.0;
    double a_gamma = 0.0;
    double b_gamma = 0.0;
    double omega_gamma = 0.0;
    RationalTF f_gamma;
};

// Open interval (max{alpha, rho/sqrt(1+rho^2 beta^2)}, 1/beta) on which all
// three radicands above are positive.
std::pair<double, double> admissible_interval(const WeightConfig& w);

GammaScalars gamma_scalars(const WeightConfig& w, double gamma);

// gamma-dependent data on the primary interval and on its continuation above
// 1/beta, where omega_gamma turns imaginary and the interpolation point moves
// from j*omega_gamma onto the real axis at -nu, nu = sqrt((g^2 b^2-1)/(g^2-a^2)).
// Some weight/plant combinations only become singular on that branch.
struct GammaPoint {
    double gamma = 0.0;
    double a_gamma = 0.0;
    double b_gamma = 0.0;
    Complex interp;
    bool continuation = false;
};

GammaPoint gamma_point(const WeightConfig& w, double gamma);

// 4x4 interpolation matrix whose singularity characterizes achievable gamma.
// With mu_w = M(j w_gamma) F_gamma(j w_gamma) and mu_a = M(a) F_gamma(a):
//   [ 1      j w      mu_w        j w mu_w ]
//   [ 1      a        mu_a        a  mu_a  ]
//   [ mu_w  -j w mu_w  1         -j w      ]
//   [ mu_a  -a  mu_a   1         -a        ]
ComplexMatrix interpolation_matrix(const PlantFactorization& fact, const WeightConfig& w,
                                   const GammaScalars& g);
ComplexMatrix interpolation_matrix(const PlantFactorization& fact, const WeightConfig& w,
                                   const GammaPoint& g);

struct GammaSearchOptions {
    int scan_points = 4000;
    double relative_margin = 1e-6;  // interval shrink at each end
    double refine_width = 1e-12;    // golden-section bracket target
    double accept_ratio = 1e-8;     // sigma_min/sigma_max acceptance
    double continuation_span = 50.0; // continuation scan covers (1/beta, span/beta]
    int threads = 1;
};

struct GammaSearchResult {
    double gamma_opt = 0.0;
    // scanned (gamma, sigma_min/sigma_max) samples, both branches if scanned
    std::vector<std::pair<double, double>> curve;
    // null vector of the interpolation matrix at gamma_opt, phase-rotated
    // real and normalized to unit length: (l10, l11, l20, l21)
    std::array<double, 4> l{};
    double min_ratio = 0.0;      // ratio at gamma_opt after refinement
    double l_im_residual = 0.0;  // max |Im l_i| before realification, diagnostic
    bool continuation = false;   // optimum found above 1/beta
};

// sigma ratios at the given gamma values; serial reference plus OpenMP variant.
std::vector<double> scan_sigma_ratio_serial(const PlantFactorization& fact, const WeightConfig& w,
                                            const std::vector<double>& gammas);
std::vector<double> scan_sigma_ratio(const PlantFactorization& fact, const WeightConfig& w,
                                     const std::vector<double>& gammas, int threads);

// Scans the admissible interval, golden-section refines every local minimum of
// the sigma ratio, keeps those below accept_ratio, and returns the largest.
GammaSearchResult find_gamma_opt(const PlantFactorization& fact, const WeightConfig& w,
                                 const GammaSearchOptions& opts = {});

} // namespace hinfsyn
