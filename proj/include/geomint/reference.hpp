#pragma once

#include "geomint/integrators.hpp"

namespace geomint {

// High-accuracy endpoint of the trivialized free rigid body flow
// mu_dot = ad*_{I^-1 mu} mu, g_dot = g hat(I^-1 mu), computed with an
// adaptive embedded Runge-Kutta scheme and per-step polar
// re-orthonormalization of g. Test oracle only; it preserves nothing by
// construction.
LiePoissonState reference_oracle(const InertiaOperator& inertia, const LiePoissonState& initial,
                                 double t_total, double local_tol = 1e-12);

}  // namespace geomint
