#include "cpdsurf/ode.hpp"

#include <algorithm>
#include <cmath>

namespace cpdsurf {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                 e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640,
                 e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

std::vector<double> axpy(const std::vector<double>& y, double h,
                         std::initializer_list<std::pair<double, const std::vector<double>*>> terms) {
  std::vector<double> r = y;
  for (auto& [coef, k] : terms)
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += h * coef * (*k)[i];
  return r;
}

}  // namespace

std::vector<double> Trajectory::eval(double t) const {
  const auto& ns = nodes;
  if (ns.size() == 1) return ns.front().y;
  std::size_t lo = 0, hi = ns.size() - 1;
  bool fwd = ns.back().t >= ns.front().t;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (fwd ? (ns[mid].t <= t) : (ns[mid].t >= t))
      lo = mid;
    else
      hi = mid;
  }
  const OdeNode& n0 = ns[lo];
  const OdeNode& n1 = ns[hi];
  double h = n1.t - n0.t;
  double s = (t - n0.t) / h;
  // Cubic Hermite basis.
  double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  double h10 = s * (1 - s) * (1 - s);
  double h01 = s * s * (3 - 2 * s);
  double h11 = s * s * (s - 1);
  std::vector<double> out(n0.y.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = h00 * n0.y[i] + h10 * h * n0.f[i] + h01 * n1.y[i] +
             h11 * h * n1.f[i];
  return out;
}

Trajectory ode_rk_adaptive(const OdeRhs& rhs, std::vector<double> y0,
                           Interval span, double tol) {
  span.validate("ode span");
  const std::size_t n = y0.size();
  double t = span.lo;
  std::vector<double> y = y0;
  std::vector<double> k1 = rhs(t, y);

  Trajectory traj;
  traj.nodes.push_back({t, y, k1});

  double h = span.length() / 100.0;
  const double hmax = span.length();

  while (t < span.hi) {
    if (t + h > span.hi) h = span.hi - t;
    auto y2 = axpy(y, h, {{a21, &k1}});
    auto k2 = rhs(t + c2 * h, y2);
    auto y3 = axpy(y, h, {{a31, &k1}, {a32, &k2}});
    auto k3 = rhs(t + c3 * h, y3);
    auto y4 = axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
    auto k4 = rhs(t + c4 * h, y4);
    auto y5 = axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
    auto k5 = rhs(t + c5 * h, y5);
    auto y6 = axpy(y, h,
                   {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    auto k6 = rhs(t + h, y6);
    auto ynew =
        axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    auto k7 = rhs(t + h, ynew);

    double err = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                       e6 * k6[i] + e7 * k7[i]);
      double sc = tol + tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      if (!std::isfinite(ei) || !std::isfinite(ynew[i])) finite = false;
      err += (ei / sc) * (ei / sc);
    }
    err = std::sqrt(err / static_cast<double>(n));

    if (finite && err <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      traj.nodes.push_back({t, y, k1});
    }

    double factor =
        finite ? 0.9 * std::pow(std::max(err, 1e-10), -0.2) : 0.1;
    h *= std::clamp(factor, 0.1, 5.0);
    h = std::min(h, hmax);
    if (h < 1e-14 * std::max(1.0, std::abs(t)))
      throw OdeError("step size underflow (singularity suspected)", t);
  }
  return traj;
}

}  // namespace cpdsurf
