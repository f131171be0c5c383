#pragma once

#include "hinfsyn/bezout.hpp"
#include "hinfsyn/controller.hpp"
#include "hinfsyn/norm.hpp"

namespace hinfsyn {

// Max residuals, over a grid, of the algebraic identities tying the raw closed
// loop to the coprime-factor parameterization (q1 recovered from C first):
//   bezout:        |N X + M Y - 1|
//   sensitivity:   |S - M (Y - num_inner q1)|
//   complementary: |T - N (X + M Q)|,  Q = outer^{-1} q1
//   weighted:      |W2 T - W2 (1 - M (Y - num_inner q1))|
struct IdentityResiduals {
    double bezout = 0.0;
    double sensitivity = 0.0;
    double complementary = 0.0;
    double weighted = 0.0;
};

struct ClosedLoopReport {
    double achieved_norm = 0.0;
    double gamma_opt = 0.0;
    // max over the base grid of |stacked magnitude - gamma_opt| / gamma_opt;
    // diagnostic only (optimal two-block solutions come out all-pass flat).
    double flatness_deviation = 0.0;
    IdentityResiduals residuals;
    double q1_bound = 0.0; // sup |q1(jw)| over the grid, stability evidence
};

TransferFn weight_one(const WeightConfig& w); // rho
RationalTF weight_two(const WeightConfig& w); // (1 + alpha s)/(beta + s)

// W1 (1+PC)^{-1} and W2 PC(1+PC)^{-1} from the raw plant and controller (not
// through the parameterization). PoleHit from the loop denominator is
// instability evidence and propagates.
TransferFn weighted_sensitivity(const PlantFactorization& fact, const TransferFn& c,
                                const WeightConfig& w);
TransferFn weighted_complementary(const PlantFactorization& fact, const TransferFn& c,
                                  const WeightConfig& w);

// sup over the refined grid of sqrt(|W1 S|^2 + |W2 T|^2).
double mixed_sensitivity_norm(const PlantFactorization& fact, const Controller& c,
                              const WeightConfig& w, const GridOptions& opts = {},
                              int threads = 1);

IdentityResiduals reduction_identities(const PlantFactorization& fact, const BezoutPair& bez,
                                       const TransferFn& c, const WeightConfig& w,
                                       const FrequencyGrid& grid);

ClosedLoopReport verify_closed_loop(const PlantFactorization& fact, const WeightConfig& w,
                                    const Controller& c, const GridOptions& opts = {},
                                    int threads = 1);

void write_report_json(const ClosedLoopReport& r, const std::string& path);
void write_stacked_csv(const PlantFactorization& fact, const Controller& c,
                       const WeightConfig& w, const FrequencyGrid& grid,
                       const std::string& path, int threads = 1);

} // namespace hinfsyn
