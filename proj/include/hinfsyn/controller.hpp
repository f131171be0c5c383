#pragma once

#include <string>

#include "hinfsyn/gamma.hpp"

namespace hinfsyn {

// Optimal controller in closed form:
//   C(s) = (k_f + A(s) + B(s) e^{-hs}) / K1(s)
// K1 is first order; A (strictly proper) and B (biproper) share the cubic
// denominator ((1 - g^2 b^2) + (g^2 - a^2) s^2)(s - a), whose roots are the
// plant zero and +-j omega_gamma. Those singularities are removable in the
// assembled numerator, so A + B e^{-hs} is a finite-impulse-response block.
struct Controller {
    double k_f = 0.0;
    RationalTF k1;
    RationalTF a; // non-delayed FIR part
    RationalTF b; // delayed FIR part
    double h = 0.0;
    double gamma_opt = 0.0;
};

Controller synthesize(const PlantFactorization& fact, const WeightConfig& w,
                      const GammaSearchResult& result);

// Roots {a, +j omega, -j omega} of the shared cubic denominator, recovered
// from its coefficients (the factored structure is a type invariant).
std::array<Complex, 3> shared_denominator_roots(const Controller& c);

// Pointwise controller response; within 1e-4 of a removable singularity the
// value is taken as a symmetric offset limit.
Complex eval_controller(const Controller& c, Complex s);

TransferFn controller_fn(const Controller& c);

// Fixed-field-order JSON with 17-significant-digit decimal coefficients
// (byte-identical across runs for identical inputs).
void save_controller(const Controller& c, const std::string& path);
Controller load_controller(const std::string& path);

} // namespace hinfsyn
