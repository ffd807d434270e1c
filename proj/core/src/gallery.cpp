#include "cpdsurf/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cpdsurf/geometry.hpp"

namespace cpdsurf {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kSqrt04 = std::sqrt(0.4);

void require_inside_disc(const Rect& d) {
  const double m2 =
      std::max(d.x.lo * d.x.lo, d.x.hi * d.x.hi) +
      std::max(d.y.lo * d.y.lo, d.y.hi * d.y.hi);
  if (!(m2 < 1.0))
    throw ValidationError(
        "scherk_isothermal: domain must stay inside the unit disc");
}

void require_inside_square(const Rect& d) {
  if (!(d.x.lo > -kPi / 2 && d.x.hi < kPi / 2 && d.y.lo > -kPi / 2 &&
        d.y.hi < kPi / 2))
    throw ValidationError("scherk: domain must satisfy |u|, |v| < pi/2");
}

}  // namespace

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names{
      "helicoid",          "catenoid", "enneper",
      "scherk",            "scherk_isothermal",
      "helicoid_isothermal"};
  return names;
}

Rect gallery_default_domain(const std::string& name) {
  if (name == "helicoid") return {{-1.5, 1.5}, {-kPi, kPi}};
  if (name == "catenoid") return {{-1.2, 1.2}, {-kPi, kPi}};
  if (name == "enneper") return {{0.2, 2.0}, {0.2, 2.0}};
  if (name == "scherk") return {{-1.2, 1.2}, {-1.2, 1.2}};
  if (name == "scherk_isothermal")
    return {{-kSqrt04, kSqrt04}, {-kSqrt04, kSqrt04}};
  if (name == "helicoid_isothermal") return {{-1.2, 1.2}, {-kPi, kPi}};
  throw ValidationError("unknown gallery surface '" + name + "'");
}

ParamSurface gallery(const std::string& name) {
  return gallery(name, gallery_default_domain(name));
}

ParamSurface gallery(const std::string& name, const Rect& domain) {
  Rect d = domain;
  d.validate();

  ParamSurface S;
  S.name = name;
  S.domain = d;

  if (name == "helicoid") {
    S.immersion = [](const Jet2& u, const Jet2& v) -> Vec3<Jet2> {
      return {u * cos(v), u * sin(v), v};
    };
    S.theta_formula = Expr::parse("2*atan(sqrt(x^2+1)-x)");
    return S;
  }
  if (name == "catenoid") {
    S.kind = CoordKind::isothermal_minimal;
    S.immersion = [](const Jet2& u, const Jet2& v) -> Vec3<Jet2> {
      return {cosh(u) * cos(v), cosh(u) * sin(v), u};
    };
    S.theta_formula = Expr::parse("2*atan(exp(-x))");
    return S;
  }
  if (name == "enneper") {
    if (d.contains(0.0, 0.0))
      throw ValidationError("enneper: domain must exclude the origin");
    S.immersion = [](const Jet2& u, const Jet2& v) -> Vec3<Jet2> {
      return {u - (u * u * u) / 3.0 + u * (v * v),
              -v + (v * v * v) / 3.0 - (u * u) * v, u * u - v * v};
    };
    S.theta_formula = Expr::parse("2*atan(1/sqrt(x^2+y^2))");
    return S;
  }
  if (name == "scherk") {
    require_inside_square(d);
    S.immersion = [](const Jet2& u, const Jet2& v) -> Vec3<Jet2> {
      return {u, v, log(cos(u)) - log(cos(v))};
    };
    S.theta_formula =
        Expr::parse("acos(1/sqrt(1/cos(x)^2+1/cos(y)^2-1))");
    return S;
  }
  if (name == "scherk_isothermal") {
    require_inside_disc(d);
    S.chained_chart = true;
    S.immersion = [](const Jet2& x, const Jet2& y) -> Vec3<Jet2> {
      const Jet2 den = 1.0 - x * x - y * y;
      const Jet2 u = atan(2.0 * x / den);
      const Jet2 v = atan(-2.0 * y / den);
      return {u, v, log(cos(u)) - log(cos(v))};
    };
    // This chart reverses orientation relative to the square chart, so the
    // normal component of the fixed direction changes sign.
    S.theta_sign_flipped = true;
    S.theta_formula = Expr::parse(
        "acos(-1/sqrt(1/cos(atan(2*x/(1-x^2-y^2)))^2"
        "+1/cos(atan(-2*y/(1-x^2-y^2)))^2-1))");
    return S;
  }
  if (name == "helicoid_isothermal") {
    S.kind = CoordKind::isothermal_minimal;
    S.immersion = [](const Jet2& x, const Jet2& y) -> Vec3<Jet2> {
      return {sinh(x) * cos(y), sinh(x) * sin(y), y};
    };
    S.theta_formula = Expr::parse("2*atan(exp(-x))");
    return S;
  }
  throw ValidationError("unknown gallery surface '" + name + "'");
}

AngleField theta_from_harmonic(const Expr& f, const Rect& domain) {
  if (!f) throw ValidationError("angle field: expression required");
  Rect d = domain;
  d.validate();
  AngleField field;
  field.domain = d;
  field.theta = Expr::parse("2*atan(exp(" + f.str() + "))");
  if (!f.uses_x() && !f.uses_y()) {
    std::ostringstream os;
    os << "constant angle field theta = " << field.theta.value(0.0, 0.0)
       << " (excluded constant-angle case)";
    field.warnings.push_back(os.str());
  }
  return field;
}

double minimal_angle_pde_residual(const AngleField& field, double x,
                                  double y) {
  const Jet2 t = field.theta.jet(x, y);
  return std::cos(t.val) * (t.dx * t.dx + t.dy * t.dy) -
         std::sin(t.val) * (t.dxx + t.dyy);
}

double log_tan_half_harmonicity(const ParamSurface& S, const GridSpec& grid) {
  grid.validate();
  const std::vector<double> xs = grid.xs(S.domain);
  const std::vector<double> ys = grid.ys(S.domain);

  double max_h = 0.0;
  for (double x : xs)
    for (double y : ys) {
      const SurfaceFrame fr = frame_at(S, x, y);
      max_h = std::max(max_h, std::abs(0.5 * fr.A.trace()));
    }
  if (!(max_h < 1e-6)) {
    std::ostringstream os;
    os << "surface is not minimal on the grid (max |H| = " << max_h << ")";
    throw ValidationError(os.str());
  }

  // d/dtheta log tan(theta/2) = 1/sin(theta).
  const FrameGradient grad = [](const SurfaceFrame& fr) {
    const double s = std::sin(fr.theta.val);
    return std::array<double, 2>{fr.theta.dx / s, fr.theta.dy / s};
  };
  double max_res = 0.0;
  for (double x : xs)
    for (double y : ys) {
      const SurfaceFrame fr = frame_at(S, x, y);
      if (std::min(fr.theta.val, kPi - fr.theta.val) < 1e-6) continue;
      max_res =
          std::max(max_res, std::abs(laplace_beltrami_fd(S, x, y, grad)));
    }
  return max_res;
}

}  // namespace cpdsurf
