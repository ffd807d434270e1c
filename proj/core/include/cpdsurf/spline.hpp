#pragma once

#include <vector>

namespace cpdsurf {

// Cubic interpolating spline with not-a-knot end conditions.
// Knots must be strictly increasing; at least four are required.
// Evaluation outside the knot range extrapolates with the end polynomial.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> xs, std::vector<double> ys);

  double value(double x) const;
  double deriv(double x) const;
  double deriv2(double x) const;

  double x_min() const { return xs_.front(); }
  double x_max() const { return xs_.back(); }
  bool empty() const { return xs_.empty(); }

 private:
  std::size_t interval(double x) const;

  std::vector<double> xs_, ys_;
  std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace cpdsurf
