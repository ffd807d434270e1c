#pragma once

#include <string>
#include <vector>

#include "cpdsurf/expr.hpp"
#include "cpdsurf/surface.hpp"

namespace cpdsurf {

// Ready-made classical minimal surfaces. Stable identifiers:
//   helicoid, catenoid, enneper, scherk, scherk_isothermal,
//   helicoid_isothermal
const std::vector<std::string>& gallery_names();
Rect gallery_default_domain(const std::string& name);
ParamSurface gallery(const std::string& name);
ParamSurface gallery(const std::string& name, const Rect& domain);

// A prescribed angle field theta(x,y) on a chart rectangle (no immersion
// attached; minimal-surface angle fields exist independently of one).
struct AngleField {
  Expr theta;
  Rect domain;
  std::vector<std::string> warnings;
};

// theta = 2 arctan(exp(f)); harmonic f makes the minimal-angle equation
// hold identically. A constant f yields an excluded constant-angle field
// and is flagged with a warning, not an error.
AngleField theta_from_harmonic(const Expr& f, const Rect& domain);

// cos(theta)(theta_x^2 + theta_y^2) - sin(theta)(theta_xx + theta_yy),
// evaluated exactly with jets.
double minimal_angle_pde_residual(const AngleField& field, double x, double y);

// Max over the grid of |Laplace-Beltrami of log tan(theta/2)| for a minimal
// surface; throws if the surface is not minimal on the grid (max |H| >= 1e-6).
double log_tan_half_harmonicity(const ParamSurface& S, const GridSpec& grid);

}  // namespace cpdsurf
