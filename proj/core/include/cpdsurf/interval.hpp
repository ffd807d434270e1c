#pragma once

#include "cpdsurf/errors.hpp"

namespace cpdsurf {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  bool contains(double t) const { return t >= lo && t <= hi; }
  void validate(const char* what = "interval") const {
    if (!(lo < hi))
      throw ValidationError(std::string(what) + ": requires lo < hi");
  }
};

// Rectangular chart domain.
struct Rect {
  Interval x;
  Interval y;

  bool contains(double px, double py) const {
    return x.contains(px) && y.contains(py);
  }
  void validate() const {
    x.validate("domain.x");
    y.validate("domain.y");
  }
};

}  // namespace cpdsurf
