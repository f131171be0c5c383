#pragma once

#include "hinfsyn/grid.hpp"
#include "hinfsyn/transfer.hpp"

namespace hinfsyn {

// Delayed-internal-feedback plant family
//   P(s) = R(s) / (1 + e^{-hs} R(s)),   R(s) = k (s-a)/(s+b)
// with k > 1, a > b > 0, h > 0. The loop denominator has infinitely many
// right-half-plane zeros clustering toward Re s = ln(k)/h; the plant has a
// single right-half-plane zero at s = a.
struct PlantParams {
    double k = 0.0;
    double a = 0.0;
    double b = 0.0;
    double h = 0.0;

    void validate() const;
};

// Inner-outer split P = (num_inner / den_inner) * outer:
//   num_inner = (s-a)/(s+a)                         finite-dimensional, inner
//   den_inner = ((s+b)+k(s-a)e^{-hs}) / ((s-b)e^{-hs}+k(s+a))   inner
//   outer     = k(s+a) / (k(s+a)+(s-b)e^{-hs})      invertible in H-infinity
struct PlantFactorization {
    PlantParams params;
    RationalTF num_inner;
    DelayRationalTF outer;
    DelayRationalTF den_inner;
    // P itself, reduced: k(s-a) / ((s+b) + k(s-a)e^{-hs}).
    DelayRationalTF plant;

    Complex outer_inverse(Complex s) const { return outer.inverse()(s); }
};

PlantFactorization factor_plant(const PlantParams& params);

// Unit modulus on the grid plus f(s) f(-s) = 1 at random off-axis points.
bool check_inner(const DelayRationalTF& f, const FrequencyGrid& grid, double tol,
                 unsigned seed = 7);

// Newton refinement of the n-th loop-denominator zero from the asymptotic
// guess ln(k)/h + j(2n+1)pi/h.
Complex refine_plant_pole(const PlantParams& params, int n, int iterations = 20);

} // namespace hinfsyn
