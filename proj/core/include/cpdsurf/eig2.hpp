#pragma once

#include <array>

#include "cpdsurf/errors.hpp"

namespace cpdsurf {

// A 2x2 matrix in a coordinate basis. Not necessarily symmetric as an array
// of numbers: the shape operator is self-adjoint with respect to the metric,
// which makes G*A symmetric, not A itself.
struct Mat2 {
  double a11 = 0, a12 = 0, a21 = 0, a22 = 0;

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a21; }
  std::array<double, 2> apply(const std::array<double, 2>& v) const {
    return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]};
  }
};

// Symmetric positive definite 2x2 (a metric).
struct Sym2 {
  double a11 = 1, a12 = 0, a22 = 1;

  double det() const { return a11 * a22 - a12 * a12; }
  double inner(const std::array<double, 2>& u,
               const std::array<double, 2>& v) const {
    return a11 * u[0] * v[0] + a12 * (u[0] * v[1] + u[1] * v[0]) +
           a22 * u[1] * v[1];
  }
};

struct EigPair {
  double kappa1 = 0, kappa2 = 0;          // sorted descending
  std::array<double, 2> dir1{}, dir2{};   // G-orthonormal
  bool umbilic = false;
};

// Eigen-decomposition of A, self-adjoint with respect to the metric G:
// returns real eigenvalues (descending) and a G-orthonormal eigenvector pair.
// Throws if G is not positive definite or A is not self-adjoint w.r.t. G
// within selfadj_tol (relative to the scale of G*A). At (near-)umbilic points
// any G-orthonormal pair is returned and the umbilic flag is set.
EigPair eig_sym_generalized(const Mat2& A, const Sym2& G,
                            double selfadj_tol = 1e-6);

}  // namespace cpdsurf
