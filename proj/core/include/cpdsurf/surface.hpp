#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cpdsurf/expr.hpp"
#include "cpdsurf/interval.hpp"
#include "cpdsurf/jet.hpp"
#include "cpdsurf/vec.hpp"

namespace cpdsurf {

// What the chart variables mean geometrically. Verification selects its
// check set from this tag.
//   generic            no structure assumed
//   prop2_adapted      orthogonal metric (1/sin^2 theta) dx^2 + beta^2 dy^2
//   isothermal_minimal isothermal chart of a minimal surface, conformal
//                      factor 1/sin^2 theta
//   canonical          arclength x: metric dx^2 + beta^2 dy^2
enum class CoordKind { generic, prop2_adapted, isothermal_minimal, canonical };

const char* coord_kind_name(CoordKind kind);

// The fixed ambient direction whose tangent part defines the angle function.
struct FixedDirection {
  Vec3d k{0.0, 0.0, 1.0};
};

struct ParamSurface {
  std::string name;
  Rect domain;
  CoordKind kind = CoordKind::generic;
  std::function<Vec3<Jet2>(const Jet2&, const Jet2&)> immersion;

  // Reparametrized through another chart; residual tolerances relax.
  bool chained_chart = false;

  // Construction-time notices (angle near excluded values, etc).
  std::vector<std::string> warnings;

  // Reference angle formula in the chart variables, when one is known.
  // The formula matches the computed angle of the oriented chart;
  // theta_sign_flipped records that the chart's normal points opposite to
  // the source parametrization's, i.e. cos(theta) changed sign when the
  // formula was attached.
  Expr theta_formula;
  bool theta_sign_flipped = false;

  Vec3<Jet2> at(const Jet2& x, const Jet2& y) const { return immersion(x, y); }
};

inline const char* coord_kind_name(CoordKind kind) {
  switch (kind) {
    case CoordKind::generic: return "generic";
    case CoordKind::prop2_adapted: return "prop2-adapted";
    case CoordKind::isothermal_minimal: return "isothermal-minimal";
    case CoordKind::canonical: return "canonical";
  }
  return "generic";
}

// Uniform sampling grid over a chart domain. margins trims a fraction of
// each axis at both ends (keeps finite-difference shifts inside the chart).
struct GridSpec {
  int nx = 41;
  int ny = 41;
  double margins = 0.0;

  void validate() const {
    if (nx < 2 || ny < 2) throw ValidationError("grid: nx, ny must be >= 2");
    if (!(margins >= 0.0 && margins < 0.5))
      throw ValidationError("grid: margins must lie in [0, 0.5)");
  }
  static std::vector<double> axis(const Interval& iv, int n, double m) {
    std::vector<double> t(static_cast<std::size_t>(n));
    const double lo = iv.lo + m * iv.length();
    const double hi = iv.hi - m * iv.length();
    for (int i = 0; i < n; ++i)
      t[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return t;
  }
  std::vector<double> xs(const Rect& d) const { return axis(d.x, nx, margins); }
  std::vector<double> ys(const Rect& d) const { return axis(d.y, ny, margins); }
};

// Negative-control helper: adds amplitude*sin(x)*sin(y) to the height
// component. The coordinate tag is kept on purpose: the perturbed immersion
// is still a genuine surface (so identity checks keep passing), but it no
// longer has the structure the tag claims, which the structural checks and
// the principal-direction criterion must detect.
inline ParamSurface perturbed_z(const ParamSurface& base, double amplitude) {
  ParamSurface out = base;
  out.name = base.name + "+ripple";
  out.theta_formula = Expr();
  auto inner = base.immersion;
  out.immersion = [inner, amplitude](const Jet2& x, const Jet2& y) {
    Vec3<Jet2> r = inner(x, y);
    r.z = r.z + amplitude * (sin(x) * sin(y));
    return r;
  };
  return out;
}

}  // namespace cpdsurf
