#pragma once

#include "hinfsyn/plant.hpp"

namespace hinfsyn {

// Coprime-factor certificate N X + M Y = 1 over H-infinity, N = num_inner * outer,
// M = den_inner. Y is finite-dimensional; X is only ever needed pointwise and is
// evaluated from the closed form X = ((1 - M Y)/num_inner) * outer^{-1}, whose
// singularity at each zero of num_inner is removable because Y interpolates 1/M there.
struct BezoutPair {
    RationalTF y;
    TransferFn x;
};

BezoutPair solve_bezout(const PlantFactorization& fact);

// max |N(s)X(s) + M(s)Y(s) - 1| over the given points.
double bezout_residual(const PlantFactorization& fact, const BezoutPair& bez,
                       const std::vector<Complex>& points);

// All stabilizing controllers: C = (X + M Q)/(Y - N Q) with Q = outer^{-1} q1.
TransferFn controller_from_q(const PlantFactorization& fact, const BezoutPair& bez,
                             const TransferFn& q1);

// Inverts the parameterization: q1 = (Y - S/M)/num_inner with S = (1+PC)^{-1}.
// Bounded on the axis (and with a removable singularity at the plant zero)
// exactly when C comes from a stable q1.
TransferFn recover_q1(const PlantFactorization& fact, const BezoutPair& bez, const TransferFn& c);

} // namespace hinfsyn
