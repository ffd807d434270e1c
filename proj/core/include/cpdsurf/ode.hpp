#pragma once

#include <functional>
#include <vector>

#include "cpdsurf/errors.hpp"
#include "cpdsurf/interval.hpp"

namespace cpdsurf {

using OdeRhs =
    std::function<std::vector<double>(double, const std::vector<double>&)>;

// One accepted step endpoint, with the derivative stored for dense output.
struct OdeNode {
  double t;
  std::vector<double> y;
  std::vector<double> f;
};

// Solution of an initial value problem as the list of accepted steps plus
// cubic Hermite interpolation between them.
struct Trajectory {
  std::vector<OdeNode> nodes;

  double t_begin() const { return nodes.front().t; }
  double t_end() const { return nodes.back().t; }
  std::vector<double> eval(double t) const;
};

// Embedded Runge-Kutta (Dormand-Prince 5(4)) with adaptive step control:
// local error per step kept at or below tol (mixed absolute/relative scale).
// Aborts with OdeError at the current location on step-size underflow, which
// is how integrable-singularity blowups surface to the caller.
Trajectory ode_rk_adaptive(const OdeRhs& rhs, std::vector<double> y0,
                           Interval span, double tol = 1e-10);

}  // namespace cpdsurf
