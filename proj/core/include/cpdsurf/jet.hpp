#pragma once

#include <cmath>
#include <string>

#include "cpdsurf/errors.hpp"

namespace cpdsurf {

// Second-order forward-mode jet in two chart variables (x, y).
// Carries a value and all partial derivatives up to order two; arithmetic
// propagates them exactly (product and chain rules), so no step sizes are
// involved anywhere in the derivative path.
struct Jet2 {
  double val = 0.0;
  double dx = 0.0, dy = 0.0;
  double dxx = 0.0, dxy = 0.0, dyy = 0.0;

  static Jet2 constant(double c) { return Jet2{c, 0, 0, 0, 0, 0}; }
  static Jet2 var_x(double x0) { return Jet2{x0, 1, 0, 0, 0, 0}; }
  static Jet2 var_y(double y0) { return Jet2{y0, 0, 1, 0, 0, 0}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.val + b.val, a.dx + b.dx,   a.dy + b.dy,
          a.dxx + b.dxx, a.dxy + b.dxy, a.dyy + b.dyy};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.val - b.val, a.dx - b.dx,   a.dy - b.dy,
          a.dxx - b.dxx, a.dxy - b.dxy, a.dyy - b.dyy};
}
inline Jet2 operator-(const Jet2& a) {
  return {-a.val, -a.dx, -a.dy, -a.dxx, -a.dxy, -a.dyy};
}
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.val * b.val,
          a.dx * b.val + a.val * b.dx,
          a.dy * b.val + a.val * b.dy,
          a.dxx * b.val + 2.0 * a.dx * b.dx + a.val * b.dxx,
          a.dxy * b.val + a.dx * b.dy + a.dy * b.dx + a.val * b.dxy,
          a.dyy * b.val + 2.0 * a.dy * b.dy + a.val * b.dyy};
}
inline Jet2 operator*(double s, const Jet2& a) {
  return {s * a.val, s * a.dx, s * a.dy, s * a.dxx, s * a.dxy, s * a.dyy};
}
inline Jet2 operator*(const Jet2& a, double s) { return s * a; }
inline Jet2 operator+(const Jet2& a, double s) {
  Jet2 r = a;
  r.val += s;
  return r;
}
inline Jet2 operator+(double s, const Jet2& a) { return a + s; }
inline Jet2 operator-(const Jet2& a, double s) { return a + (-s); }
inline Jet2 operator-(double s, const Jet2& a) { return (-a) + s; }

// u(f) for a scalar function u with u(f.val)=u0, u'(f.val)=u1, u''(f.val)=u2.
inline Jet2 compose(const Jet2& f, double u0, double u1, double u2) {
  return {u0,
          u1 * f.dx,
          u1 * f.dy,
          u2 * f.dx * f.dx + u1 * f.dxx,
          u2 * f.dx * f.dy + u1 * f.dxy,
          u2 * f.dy * f.dy + u1 * f.dyy};
}

inline Jet2 recip(const Jet2& f) {
  if (f.val == 0.0) throw DomainError("division by zero", 0.0);
  double iv = 1.0 / f.val;
  return compose(f, iv, -iv * iv, 2.0 * iv * iv * iv);
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * recip(b); }
inline Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }
inline Jet2 operator/(double s, const Jet2& b) { return s * recip(b); }

inline Jet2 sin(const Jet2& f) {
  double s = std::sin(f.val), c = std::cos(f.val);
  return compose(f, s, c, -s);
}
inline Jet2 cos(const Jet2& f) {
  double s = std::sin(f.val), c = std::cos(f.val);
  return compose(f, c, -s, -c);
}
inline Jet2 tan(const Jet2& f) {
  if (std::abs(std::cos(f.val)) < 1e-12)
    throw DomainError("tan near a pole", f.val);
  double t = std::tan(f.val), d = 1.0 + t * t;
  return compose(f, t, d, 2.0 * t * d);
}
inline Jet2 atan(const Jet2& f) {
  double v = f.val, d = 1.0 / (1.0 + v * v);
  return compose(f, std::atan(v), d, -2.0 * v * d * d);
}
inline Jet2 asin(const Jet2& f) {
  double v = f.val;
  if (std::abs(v) >= 1.0) throw DomainError("asin outside (-1,1)", v);
  double w = 1.0 - v * v, s = std::sqrt(w);
  return compose(f, std::asin(v), 1.0 / s, v / (w * s));
}
inline Jet2 acos(const Jet2& f) {
  double v = f.val;
  if (std::abs(v) >= 1.0) throw DomainError("acos outside (-1,1)", v);
  double w = 1.0 - v * v, s = std::sqrt(w);
  return compose(f, std::acos(v), -1.0 / s, -v / (w * s));
}
inline Jet2 exp(const Jet2& f) {
  double e = std::exp(f.val);
  return compose(f, e, e, e);
}
inline Jet2 log(const Jet2& f) {
  if (f.val <= 0.0) throw DomainError("ln of a nonpositive value", f.val);
  double iv = 1.0 / f.val;
  return compose(f, std::log(f.val), iv, -iv * iv);
}
inline Jet2 sqrt(const Jet2& f) {
  if (f.val < 0.0) throw DomainError("sqrt of a negative value", f.val);
  if (f.val == 0.0) throw DomainError("sqrt derivative singular at 0", 0.0);
  double s = std::sqrt(f.val);
  return compose(f, s, 0.5 / s, -0.25 / (s * f.val));
}
inline Jet2 sinh(const Jet2& f) {
  double s = std::sinh(f.val), c = std::cosh(f.val);
  return compose(f, s, c, s);
}
inline Jet2 cosh(const Jet2& f) {
  double s = std::sinh(f.val), c = std::cosh(f.val);
  return compose(f, c, s, c);
}
inline Jet2 tanh(const Jet2& f) {
  double t = std::tanh(f.val), d = 1.0 - t * t;
  return compose(f, t, d, -2.0 * t * d);
}
inline Jet2 abs(const Jet2& f) {
  double sg = f.val > 0 ? 1.0 : (f.val < 0 ? -1.0 : 0.0);
  return compose(f, std::abs(f.val), sg, 0.0);
}

// a^b. Integer constant exponents use the power rule directly (any base);
// otherwise the base must be positive and exp(b*ln a) applies.
inline Jet2 pow(const Jet2& a, const Jet2& b) {
  bool const_exp = b.dx == 0 && b.dy == 0 && b.dxx == 0 && b.dxy == 0 && b.dyy == 0;
  if (const_exp && b.val == std::floor(b.val) && std::abs(b.val) <= 1e9) {
    double n = b.val;
    if (a.val == 0.0 && n < 0)
      throw DomainError("zero raised to a negative power", n);
    double p0 = std::pow(a.val, n);
    double p1 = n == 0 ? 0.0 : n * std::pow(a.val, n - 1);
    double p2 = (n == 0 || n == 1) ? 0.0 : n * (n - 1) * std::pow(a.val, n - 2);
    return compose(a, p0, p1, p2);
  }
  if (a.val <= 0.0)
    throw DomainError("power with non-integer exponent of a nonpositive base",
                      a.val);
  return exp(b * log(a));
}

inline bool is_finite(const Jet2& j) {
  return std::isfinite(j.val) && std::isfinite(j.dx) && std::isfinite(j.dy) &&
         std::isfinite(j.dxx) && std::isfinite(j.dxy) && std::isfinite(j.dyy);
}

// First-order jet, used for quantities derived from first derivatives of the
// immersion (normal, metric coefficients, angle function): their own first
// partials are still exactly representable from a second-order immersion jet.
struct Jet1 {
  double val = 0.0;
  double dx = 0.0, dy = 0.0;

  static Jet1 constant(double c) { return Jet1{c, 0, 0}; }
};

inline Jet1 operator+(const Jet1& a, const Jet1& b) {
  return {a.val + b.val, a.dx + b.dx, a.dy + b.dy};
}
inline Jet1 operator-(const Jet1& a, const Jet1& b) {
  return {a.val - b.val, a.dx - b.dx, a.dy - b.dy};
}
inline Jet1 operator-(const Jet1& a) { return {-a.val, -a.dx, -a.dy}; }
inline Jet1 operator*(const Jet1& a, const Jet1& b) {
  return {a.val * b.val, a.dx * b.val + a.val * b.dx,
          a.dy * b.val + a.val * b.dy};
}
inline Jet1 operator*(double s, const Jet1& a) {
  return {s * a.val, s * a.dx, s * a.dy};
}
inline Jet1 operator*(const Jet1& a, double s) { return s * a; }
inline Jet1 compose1(const Jet1& f, double u0, double u1) {
  return {u0, u1 * f.dx, u1 * f.dy};
}
inline Jet1 operator/(const Jet1& a, const Jet1& b) {
  if (b.val == 0.0) throw DomainError("division by zero", 0.0);
  double iv = 1.0 / b.val;
  return a * compose1(b, iv, -iv * iv);
}
inline Jet1 sqrt1(const Jet1& f) {
  if (f.val <= 0.0) throw DomainError("sqrt of a nonpositive value", f.val);
  double s = std::sqrt(f.val);
  return compose1(f, s, 0.5 / s);
}

}  // namespace cpdsurf
