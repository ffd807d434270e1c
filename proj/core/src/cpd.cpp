#include "cpdsurf/cpd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "cpdsurf/geometry.hpp"
#include "cpdsurf/ode.hpp"
#include "cpdsurf/quadrature.hpp"

namespace cpdsurf {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Value with first and second derivative of a one-variable function.
struct Deriv2 {
  double v, d1, d2;
};
using Fn1 = std::function<Deriv2(double)>;

Fn1 fn_from_expr_x(const Expr& e) {
  return [e](double t) {
    const Jet2 j = e.jet(t, 0.0);
    return Deriv2{j.val, j.dx, j.dxx};
  };
}
Fn1 fn_from_expr_y(const Expr& e) {
  return [e](double t) {
    const Jet2 j = e.jet(0.0, t);
    return Deriv2{j.val, j.dy, j.dyy};
  };
}
Fn1 fn_from_spline(std::shared_ptr<const CubicSpline> s) {
  return [s](double t) { return Deriv2{s->value(t), s->deriv(t), s->deriv2(t)}; };
}

Jet2 lift(const Fn1& f, const Jet2& t) {
  const Deriv2 d = f(t.val);
  return compose(t, d.v, d.d1, d.d2);
}

void validate_theta(const Fn1& theta, const Interval& xr, int samples,
                    std::vector<std::string>& warnings) {
  samples = std::max(samples, 2);
  double min_gap = kPi;  // distance to pi/2
  double gap_at = xr.lo;
  double prev_side = 0.0;
  bool crossed = false;
  double crossed_at = xr.lo;
  for (int i = 0; i < samples; ++i) {
    const double t = xr.lo + xr.length() * i / (samples - 1);
    const double th = theta(t).v;
    if (!(th > 0.0 && th < kPi)) {
      std::ostringstream os;
      os << "theta = " << th << " leaves (0, pi) at x = " << t;
      throw ValidationError(os.str());
    }
    const double side = th - kPi / 2.0;
    if (std::abs(side) < min_gap) {
      min_gap = std::abs(side);
      gap_at = t;
    }
    if (i > 0 && side * prev_side < 0.0 && !crossed) {
      crossed = true;
      crossed_at = t;
    }
    prev_side = side;
  }
  if (crossed) {
    std::ostringstream os;
    os << "theta crosses pi/2 near x = " << crossed_at
       << "; such points will be masked";
    warnings.push_back(os.str());
  } else if (min_gap < 1e-6) {
    std::ostringstream os;
    os << "theta is within " << min_gap << " of pi/2 at x = " << gap_at
       << "; such points will be masked";
    warnings.push_back(os.str());
  }
}

double integrate(const Fn1& f, bool use_sin, double a, double b, double tol) {
  return quad_adaptive(
      [&f, use_sin](double t) {
        const double v = f(t).v;
        return use_sin ? std::sin(v) : std::cos(v);
      },
      a, b, tol);
}

// Shared Case-1 assembly once theta(x) and psi(y) are available as
// derivative-carrying functions. phi(x_base) = phi_base, gamma(0) = (0,0),
// z(x_base) = 0 (z_base 0 is the spec normalization for expression input;
// profile input anchors z at the span start).
ParamSurface assemble_case1(std::string name, Fn1 theta, Fn1 psi, Rect domain,
                            double quad_tol, double x_base, double phi_base,
                            int validation_samples) {
  domain.validate();
  ParamSurface S;
  S.name = std::move(name);
  S.domain = domain;
  S.kind = CoordKind::canonical;

  validate_theta(theta, domain.x, validation_samples, S.warnings);

  // beta = phi + psi > 0: minimum over a product grid is the sum of the
  // axis minima.
  {
    const int n = std::max(validation_samples, 2);
    double phi_min = 0, phi_at = domain.x.lo;
    for (int i = 0; i < n; ++i) {
      const double x = domain.x.lo + domain.x.length() * i / (n - 1);
      const double phi =
          phi_base + integrate(theta, false, x_base, x, quad_tol);
      if (i == 0 || phi < phi_min) {
        phi_min = phi;
        phi_at = x;
      }
    }
    double psi_min = 0, psi_at = domain.y.lo;
    for (int i = 0; i < n; ++i) {
      const double y = domain.y.lo + domain.y.length() * i / (n - 1);
      const double p = psi(y).v;
      if (i == 0 || p < psi_min) {
        psi_min = p;
        psi_at = y;
      }
    }
    if (!(phi_min + psi_min > 0.0)) {
      std::ostringstream os;
      os << "immersion degenerates: beta = phi + psi = " << phi_min + psi_min
         << " <= 0 at (x = " << phi_at << ", y = " << psi_at << ")";
      throw ValidationError(os.str());
    }
  }

  S.immersion = [theta, psi, quad_tol, x_base,
                 phi_base](const Jet2& jx, const Jet2& jy) -> Vec3<Jet2> {
    const Deriv2 th = theta(jx.val);
    const double st = std::sin(th.v), ct = std::cos(th.v);
    const double phiv =
        phi_base + integrate(theta, false, x_base, jx.val, quad_tol);
    const Jet2 phi = compose(jx, phiv, ct, -st * th.d1);
    const double zv = integrate(theta, true, x_base, jx.val, quad_tol);
    const Jet2 z = compose(jx, zv, st, ct * th.d1);

    const Deriv2 ps = psi(jy.val);
    const double sy = std::sin(jy.val), cy = std::cos(jy.val);
    const double g1v = -quad_adaptive(
        [&psi](double t) { return psi(t).v * std::sin(t); }, 0.0, jy.val,
        quad_tol);
    const double g2v = quad_adaptive(
        [&psi](double t) { return psi(t).v * std::cos(t); }, 0.0, jy.val,
        quad_tol);
    const Jet2 g1 = compose(jy, g1v, -ps.v * sy, -(ps.d1 * sy + ps.v * cy));
    const Jet2 g2 = compose(jy, g2v, ps.v * cy, ps.d1 * cy - ps.v * sy);
    const Jet2 cj = cos(jy), sj = sin(jy);
    return {phi * cj + g1, phi * sj + g2, z};
  };
  return S;
}

}  // namespace

ParamSurface build_case1(const Case1Spec& spec) {
  if (!spec.theta) throw ValidationError("case1: theta expression required");
  if (!spec.psi) throw ValidationError("case1: psi expression required");
  if (spec.theta.uses_y())
    throw ValidationError("case1: theta must depend only on x");
  if (spec.psi.uses_x())
    throw ValidationError("case1: psi must depend only on y");
  ParamSurface S = assemble_case1(
      spec.name, fn_from_expr_x(spec.theta), fn_from_expr_y(spec.psi),
      spec.domain, spec.quad_tol, 0.0, spec.phi0, spec.validation_samples);
  S.theta_formula = spec.theta;
  return S;
}

ParamSurface build_case1(const CmcProfile& profile, const Interval& y_range,
                         double quad_tol) {
  if (profile.xs.size() < 4)
    throw ValidationError("profile: table too short to interpolate");
  auto spl =
      std::make_shared<CubicSpline>(profile.xs, profile.thetas);
  const double psi0 = profile.psi0;
  Fn1 psi = [psi0](double) { return Deriv2{psi0, 0.0, 0.0}; };
  Rect domain{profile.span, y_range};
  ParamSurface S =
      assemble_case1("case1-cmc", fn_from_spline(spl), psi, domain, quad_tol,
                     profile.span.lo, profile.phi0, 101);
  return S;
}

ParamSurface build_case2(const Case2Spec& spec) {
  if (!spec.theta) throw ValidationError("case2: theta expression required");
  if (spec.theta.uses_y())
    throw ValidationError("case2: theta must depend only on x");
  Rect domain = spec.domain;
  domain.validate();

  ParamSurface S;
  S.name = spec.name;
  S.domain = domain;
  S.kind = CoordKind::canonical;
  S.theta_formula = spec.theta;

  Fn1 theta = fn_from_expr_x(spec.theta);
  validate_theta(theta, domain.x, spec.validation_samples, S.warnings);

  const double y0 = spec.y0;
  const double quad_tol = spec.quad_tol;
  const Vec3d v0{-std::sin(y0), std::cos(y0), 0.0};
  S.immersion = [theta, y0, v0, quad_tol](const Jet2& jx,
                                          const Jet2& jy) -> Vec3<Jet2> {
    const Deriv2 th = theta(jx.val);
    const double st = std::sin(th.v), ct = std::cos(th.v);
    const double phiv = integrate(theta, false, 0.0, jx.val, quad_tol);
    const Jet2 phi = compose(jx, phiv, ct, -st * th.d1);
    const double zv = integrate(theta, true, 0.0, jx.val, quad_tol);
    const Jet2 z = compose(jx, zv, st, ct * th.d1);
    return {phi * std::cos(y0) + v0.x * jy, phi * std::sin(y0) + v0.y * jy, z};
  };
  return S;
}

ParamSurface catenoid_cpd(double c, const Rect& domain) {
  if (c == 0.0) throw ValidationError("catenoid: c must be nonzero");
  Rect d = domain;
  d.validate();

  ParamSurface S;
  S.name = "catenoid-cpd";
  S.domain = d;
  S.kind = CoordKind::canonical;
  S.immersion = [c](const Jet2& jx, const Jet2& jy) -> Vec3<Jet2> {
    const Jet2 s = sqrt(jx * jx + c * c);
    return {s * cos(jy), s * sin(jy), c * log(jx + s)};
  };
  if (c > 0.0 && d.x.lo > 0.0)
    S.theta_formula = Expr::parse("atan(" + fmt17(c) + "/x)");
  return S;
}

Rect sphere_default_domain(double a, double b) {
  if (!(a > 0.0)) throw ValidationError("sphere: requires a > 0");
  const double eps = 0.3;
  Rect d{{(eps - b) / a, (kPi - eps - b) / a}, {0.0, 2.0 * kPi}};
  d.x.validate("sphere domain");
  return d;
}

ParamSurface sphere_cpd(double a, double b, const Rect& domain) {
  if (a == 0.0) throw ValidationError("sphere: a must be nonzero");
  if (a < 0.0)
    throw ValidationError(
        "sphere: requires a > 0 (beta = sin(theta)/a must stay positive)");
  Rect d = domain;
  d.validate();
  for (double x : {d.x.lo, d.x.hi}) {
    const double th = a * x + b;
    if (!(th > 0.0 && th < kPi)) {
      std::ostringstream os;
      os << "sphere: theta = " << th << " leaves (0, pi) at x = " << x;
      throw ValidationError(os.str());
    }
  }

  ParamSurface S;
  S.name = "sphere-cpd";
  S.domain = d;
  S.kind = CoordKind::canonical;
  S.immersion = [a, b](const Jet2& jx, const Jet2& jy) -> Vec3<Jet2> {
    const Jet2 th = a * jx + b;
    const Jet2 phi = sin(th) / a;
    const Jet2 z = (std::cos(b) / a) - cos(th) / a;
    return {phi * cos(jy), phi * sin(jy), z};
  };
  S.theta_formula = Expr::parse(fmt17(a) + "*x+" + fmt17(b));
  return S;
}

CmcProfile cmc_profile(double H, double psi0, double theta0, double phi0,
                       Interval span, double tol) {
  span.validate("cmc span");
  if (!(theta0 > 0.0 && theta0 < kPi))
    throw ValidationError("cmc: theta0 must lie in (0, pi)");
  if (phi0 + psi0 == 0.0)
    throw ValidationError("cmc: phi0 + psi0 must be nonzero");

  OdeRhs rhs = [H, psi0](double t, const std::vector<double>& y) {
    const double beta = y[1] + psi0;
    if (std::abs(beta) < 1e-12)
      throw OdeError("phi + psi0 crossed zero", t);
    return std::vector<double>{2.0 * H - std::sin(y[0]) / beta,
                               std::cos(y[0])};
  };
  CmcProfile out;
  out.H = H;
  out.psi0 = psi0;
  out.theta0 = theta0;
  out.phi0 = phi0;
  out.span = span;
  const int n = std::max(8, static_cast<int>(std::ceil(span.length() / 0.01)));
  out.xs.reserve(static_cast<std::size_t>(n) + 1);
  // Integrates table node to table node so entries carry integrator accuracy
  // rather than dense-output interpolation error.
  std::vector<double> y{theta0, phi0};
  out.xs.push_back(span.lo);
  out.thetas.push_back(theta0);
  out.phis.push_back(phi0);
  const double beta_sign = phi0 + psi0 > 0.0 ? 1.0 : -1.0;
  for (int i = 1; i <= n; ++i) {
    const double x = i == n ? span.hi : span.lo + span.length() * i / n;
    const Trajectory tr = ode_rk_adaptive(rhs, y, {out.xs.back(), x}, tol);
    y = tr.nodes.back().y;
    // catches a step that hopped across the singular locus without an RHS
    // evaluation close enough to trip the pointwise guard
    if ((y[1] + psi0) * beta_sign <= 0.0)
      throw OdeError("phi + psi0 crossed zero", x);
    out.xs.push_back(x);
    out.thetas.push_back(y[0]);
    out.phis.push_back(y[1]);
  }
  return out;
}

CpdReport is_cpd(const ParamSurface& S, const GridSpec& grid, double tol) {
  grid.validate();
  const std::vector<double> xs = grid.xs(S.domain);
  const std::vector<double> ys = grid.ys(S.domain);

  CpdReport rep;
  double chart_defect = 0.0;
  std::size_t unmasked = 0;
  for (double x : xs) {
    for (double y : ys) {
      const SurfaceFrame fr = frame_at(S, x, y);
      const double th = fr.theta.val;
      if (std::min(th, kPi - th) < 1e-6) {
        ++rep.masked;
        continue;
      }
      ++unmasked;
      const double u1 = fr.u1.val, u2 = fr.u2.val;
      const double W = std::sqrt(fr.W2());
      const double nU = std::sqrt(fr.gnorm2(u1, u2));
      chart_defect = std::max(
          chart_defect, std::abs(u2) * W / (nU * std::sqrt(fr.E.val)));
      rep.max_theta_y = std::max(rep.max_theta_y, std::abs(fr.theta.dy));
      const double w1 = fr.A.a11 * u1 + fr.A.a12 * u2;
      const double w2 = fr.A.a21 * u1 + fr.A.a22 * u2;
      const double nAU = std::sqrt(fr.gnorm2(w1, w2));
      const double align =
          nAU < 1e-14 ? 0.0 : std::abs(u1 * w2 - u2 * w1) * W / (nU * nAU);
      rep.max_alignment = std::max(rep.max_alignment, align);
    }
  }
  if (unmasked == 0) {
    rep.adapted_chart = false;
    rep.is_cpd = false;
    rep.message = "all points masked (degenerate angle)";
    return rep;
  }
  rep.adapted_chart = chart_defect < tol;
  if (!rep.adapted_chart) {
    rep.is_cpd = false;
    rep.message = "not in adapted coordinates";
    return rep;
  }
  rep.is_cpd = rep.max_theta_y < tol && rep.max_alignment < tol;
  rep.message = rep.is_cpd ? "canonical principal direction confirmed"
                           : "criterion fails on this grid";
  return rep;
}

}  // namespace cpdsurf
