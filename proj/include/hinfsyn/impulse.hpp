#pragma once

#include "hinfsyn/controller.hpp"

namespace hinfsyn {

// Residue expansion of the FIR block A(s) + B(s) e^{-hs} over the shared
// denominator roots. B is biproper; its direct feedthrough becomes a Dirac
// atom of weight direct_b at t = h, reported separately from samples.
struct ImpulseExpansion {
    std::vector<Complex> poles;
    std::vector<Complex> res_a;
    std::vector<Complex> res_b;
    double direct_b = 0.0;
    double h = 0.0;
};

ImpulseExpansion expand(const Controller& c);

// Sample of the impulse response at t >= 0 (the delta atom excluded):
//   t <  h: sum_p Re(res_a[p] e^{pt})
//   t >= h: sum_p Re((res_a[p] + res_b[p] e^{-ph}) e^{pt}), which vanishes
//           when the expansion satisfies the finite-support condition.
double impulse_response(const ImpulseExpansion& e, double t);

// max_p |res_a[p] + res_b[p] e^{-hp}| / max_p |res_a[p]|; 0 for the empty expansion.
double finite_support_residual(const ImpulseExpansion& e);

// Columns t,value with a header row; delta atoms appended as comment lines
// "# delta,t=<h>,weight=<w>". Returns false when the atom fell outside t_max.
bool write_impulse_csv(const ImpulseExpansion& e, double t_max, double dt,
                       const std::string& path);

} // namespace hinfsyn
