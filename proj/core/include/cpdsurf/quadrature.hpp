#pragma once

#include <functional>

#include "cpdsurf/errors.hpp"

namespace cpdsurf {

// Adaptive quadrature on [a, b] with an absolute tolerance: a Gauss-Kronrod
// 7/15 pair per panel, always bisecting the panel with the worst error
// estimate until the summed estimate fits tol. Throws QuadratureError
// carrying the last whole-integral estimate if the split budget runs out
// first (non-integrable singularities). Nodes never touch panel endpoints,
// so integrable endpoint limits (atan(1/t) at t=0, even 1/sqrt(t)) are
// evaluated only in the open interior and resolved by panel concentration.
double quad_adaptive(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-10);

}  // namespace cpdsurf
