#pragma once

#include <array>

#include "cpdsurf/eig2.hpp"
#include "cpdsurf/expr.hpp"
#include "cpdsurf/surface.hpp"

namespace cpdsurf {

struct FirstForm {
  double E = 1, F = 0, G = 1;
  double det() const { return E * G - F * F; }
};

struct SecondForm {
  double e = 0, f = 0, g2 = 0;
};

struct CurvatureData {
  double K = 0;                 // det A
  double H = 0;                 // (1/2) trace A
  double kappa1 = 0, kappa2 = 0;  // kappa1 >= kappa2
  std::array<double, 2> dir1{}, dir2{};
  bool umbilic = false;
};

struct AngleData {
  double theta = 0;        // arccos of the clamped normal component, in [0,pi]
  double cos_theta = 1;
  Vec2d U;                 // tangent part of k in the coordinate basis
  Vec2d grad_theta;        // index-raised (theta_x, theta_y)
  bool degenerate = false; // theta within 1e-9 of 0 or pi
};

struct Christoffels {
  // Gamma^x_xx, Gamma^y_xx, Gamma^x_xy, Gamma^y_xy, Gamma^x_yy, Gamma^y_yy
  double xxx = 0, yxx = 0, xxy = 0, yxy = 0, xyy = 0, yyy = 0;
};

// Everything the verification suites need at one chart point, with exact
// first partials (Jet1) of every quantity derived from first derivatives of
// the immersion. Second-form coefficients and the shape operator are values:
// their chart derivatives require third immersion derivatives and are taken
// by finite-differencing frames (see codazzi_residual).
struct SurfaceFrame {
  double x = 0, y = 0;
  Vec3<Jet1> r_x, r_y, N;
  Vec3d r;                       // position
  Jet1 E, F, G;                  // metric with exact first partials
  double e = 0, f = 0, g2 = 0;   // second form
  Mat2 A;                        // shape operator, coordinate basis
  Jet1 cos_theta;                // <k, N>
  Jet1 theta;                    // arccos, derivative masked when degenerate
  Jet1 u1, u2;                   // U components from the Gram system
  Christoffels gamma;
  bool angle_degenerate = false; // |cos theta| within rounding of 1

  double W2() const { return E.val * G.val - F.val * F.val; }
  double gnorm2(double v1, double v2) const {
    return E.val * v1 * v1 + 2 * F.val * v1 * v2 + G.val * v2 * v2;
  }
};

SurfaceFrame frame_at(const ParamSurface& S, double x, double y,
                      const FixedDirection& k = {});

FirstForm first_form(const ParamSurface& S, double x, double y);
Vec3d unit_normal(const ParamSurface& S, double x, double y);
SecondForm second_form(const ParamSurface& S, double x, double y);
Mat2 shape_operator(const ParamSurface& S, double x, double y);
CurvatureData curvatures(const ParamSurface& S, double x, double y);
AngleData angle_data(const ParamSurface& S, double x, double y,
                     const FixedDirection& k = {});
Christoffels christoffel(const ParamSurface& S, double x, double y);

// Divergence-form Laplace-Beltrami of an expression field, exact via jets.
double laplace_beltrami(const ParamSurface& S, const Expr& field, double x,
                        double y);

// Laplace-Beltrami of a field given only through its chart gradient at each
// point (fields built from the geometric angle function). The flux terms are
// finite-differenced across four shifted frames with the given step.
using FrameGradient = std::function<std::array<double, 2>(const SurfaceFrame&)>;
double laplace_beltrami_fd(const ParamSurface& S, double x, double y,
                           const FrameGradient& grad,
                           const FixedDirection& k = {}, double step = 1e-5);

// g-norm of (nabla_dx A)dy - (nabla_dy A)dx, the coordinate-free content of
// the Codazzi equation. Shape-operator derivatives come from central
// differences of frames with the given step.
double codazzi_residual(const ParamSurface& S, double x, double y,
                        double step = 1e-5);

}  // namespace cpdsurf
