#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cpdsurf/expr.hpp"
#include "cpdsurf/interval.hpp"
#include "cpdsurf/spline.hpp"
#include "cpdsurf/surface.hpp"

namespace cpdsurf {

// Rotational-part surface: r(x,y) = (phi(x)(cos y, sin y) + gamma(y), z(x))
// with phi' = cos(theta), z' = sin(theta), gamma' = psi(y)(-sin y, cos y).
// theta must use only x, psi only y. phi(0) = phi0; gamma(0) = (0,0).
struct Case1Spec {
  Expr theta;
  Expr psi;
  Rect domain;
  double quad_tol = 1e-10;
  double phi0 = 0.0;
  int validation_samples = 101;
  std::string name = "case1";
};

// Cylinder over the profile curve: rulings along v0 = (-sin y0, cos y0, 0).
struct Case2Spec {
  Expr theta;
  double y0 = 0.0;
  Rect domain;
  double quad_tol = 1e-10;
  int validation_samples = 101;
  std::string name = "case2";
};

// Solution table of the constant-mean-curvature angle equation
//   theta' = 2H - sin(theta)/(phi + psi0),   phi' = cos(theta)
// with theta(span.lo) = theta0, phi(span.lo) = phi0.
struct CmcProfile {
  double H = 0.0;
  double psi0 = 0.0;
  double theta0 = 0.0;
  double phi0 = 0.0;
  Interval span;
  std::vector<double> xs, thetas, phis;
};

ParamSurface build_case1(const Case1Spec& spec);
ParamSurface build_case2(const Case2Spec& spec);

// Closed-form catenoid in the arclength chart:
//   r = (sqrt(x^2+c^2) cos y, sqrt(x^2+c^2) sin y, c ln(x + sqrt(x^2+c^2))).
ParamSurface catenoid_cpd(double c, const Rect& domain = {{0.5, 3.0},
                                                          {0.0, 6.283185307179586}});

// Umbilic round sphere of radius 1/|a| from the affine angle ax + b, with
// the particular primitive phi = sin(ax+b)/a (forced by umbilicity).
ParamSurface sphere_cpd(double a, double b, const Rect& domain);
Rect sphere_default_domain(double a, double b);

CmcProfile cmc_profile(double H, double psi0, double theta0, double phi0,
                       Interval span, double tol = 1e-10);

// Case-1 surface over a profile table; theta(x) is the not-a-knot spline of
// the table, psi is the constant psi0 the profile was solved with.
ParamSurface build_case1(const CmcProfile& profile, const Interval& y_range,
                         double quad_tol = 1e-10);

struct CpdReport {
  bool adapted_chart = false;
  bool is_cpd = false;
  double max_theta_y = 0.0;
  double max_alignment = 0.0;  // sin of the angle between A*U and U
  std::size_t masked = 0;
  std::string message;
};

// Checks, over the grid, that the chart is adapted (U parallel to the first
// coordinate direction) and that the structural criterion holds both as
// theta_y = 0 and as A*U parallel to U.
CpdReport is_cpd(const ParamSurface& S, const GridSpec& grid,
                 double tol = 1e-6);

}  // namespace cpdsurf
