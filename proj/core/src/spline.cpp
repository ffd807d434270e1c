#include "cpdsurf/spline.hpp"

#include <algorithm>
#include <cstddef>

#include "cpdsurf/errors.hpp"

namespace cpdsurf {

CubicSpline::CubicSpline(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  const std::size_t n = xs_.size();
  if (n != ys_.size()) throw ValidationError("spline: mismatched table sizes");
  if (n < 4) throw ValidationError("spline: need at least four knots");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(xs_[i] < xs_[i + 1]))
      throw ValidationError("spline: knots must be strictly increasing");
  }

  std::vector<double> h(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) h[i] = xs_[i + 1] - xs_[i];
  auto slope = [&](std::size_t i) { return (ys_[i + 1] - ys_[i]) / h[i]; };

  // Unknowns m_1..m_{n-2}; the boundary curvatures are recovered afterwards
  // from the not-a-knot conditions (third derivative continuous across the
  // first and last interior knots).
  const std::size_t k = n - 2;
  std::vector<double> sub(k, 0), diag(k, 0), sup(k, 0), rhs(k, 0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const std::size_t r = i - 1;
    sub[r] = h[i - 1] / 6.0;
    diag[r] = (h[i - 1] + h[i]) / 3.0;
    sup[r] = h[i] / 6.0;
    rhs[r] = slope(i) - slope(i - 1);
  }
  // Fold m_0 = ((h0+h1) m_1 - h0 m_2) / h1 into the first row.
  diag[0] += h[0] / 6.0 * (h[0] + h[1]) / h[1];
  sup[0] += -h[0] * h[0] / (6.0 * h[1]);
  // Fold m_{n-1} = (1 + hl/hp) m_{n-2} - (hl/hp) m_{n-3} into the last row,
  // where hl, hp are the last two interval widths.
  {
    const double hl = h[n - 2], hp = h[n - 3];
    diag[k - 1] += hl / 6.0 * (1.0 + hl / hp);
    sub[k - 1] += -hl * hl / (6.0 * hp);
  }

  // Thomas algorithm.
  for (std::size_t i = 1; i < k; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  std::vector<double> mi(k);
  mi[k - 1] = rhs[k - 1] / diag[k - 1];
  for (std::size_t i = k - 1; i-- > 0;)
    mi[i] = (rhs[i] - sup[i] * mi[i + 1]) / diag[i];

  m_.assign(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) m_[i + 1] = mi[i];
  m_[0] = ((h[0] + h[1]) * m_[1] - h[0] * m_[2]) / h[1];
  m_[n - 1] = (1.0 + h[n - 2] / h[n - 3]) * m_[n - 2] -
              (h[n - 2] / h[n - 3]) * m_[n - 3];
}

std::size_t CubicSpline::interval(double x) const {
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = it == xs_.begin() ? 0 : static_cast<std::size_t>(it - xs_.begin()) - 1;
  return std::min(i, xs_.size() - 2);
}

double CubicSpline::value(double x) const {
  const std::size_t i = interval(x);
  const double h = xs_[i + 1] - xs_[i];
  const double a = xs_[i + 1] - x, b = x - xs_[i];
  return m_[i] * a * a * a / (6.0 * h) + m_[i + 1] * b * b * b / (6.0 * h) +
         (ys_[i] / h - m_[i] * h / 6.0) * a +
         (ys_[i + 1] / h - m_[i + 1] * h / 6.0) * b;
}

double CubicSpline::deriv(double x) const {
  const std::size_t i = interval(x);
  const double h = xs_[i + 1] - xs_[i];
  const double a = xs_[i + 1] - x, b = x - xs_[i];
  return -m_[i] * a * a / (2.0 * h) + m_[i + 1] * b * b / (2.0 * h) +
         (ys_[i + 1] - ys_[i]) / h - (m_[i + 1] - m_[i]) * h / 6.0;
}

double CubicSpline::deriv2(double x) const {
  const std::size_t i = interval(x);
  const double h = xs_[i + 1] - xs_[i];
  return (m_[i] * (xs_[i + 1] - x) + m_[i + 1] * (x - xs_[i])) / h;
}

}  // namespace cpdsurf
