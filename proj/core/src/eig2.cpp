#include "cpdsurf/eig2.hpp"

#include <algorithm>
#include <cmath>

namespace cpdsurf {

namespace {

struct Chol {
  double l11, l21, l22;  // G = L L^T, L lower triangular
};

Chol cholesky(const Sym2& G) {
  if (!(G.a11 > 0) || !(G.det() > 0)) {
    throw DomainError("metric not positive definite", G.det());
  }
  Chol c{};
  c.l11 = std::sqrt(G.a11);
  c.l21 = G.a12 / c.l11;
  c.l22 = std::sqrt(G.a22 - c.l21 * c.l21);
  return c;
}

}  // namespace

EigPair eig_sym_generalized(const Mat2& A, const Sym2& G, double selfadj_tol) {
  const Chol L = cholesky(G);

  // Upper-triangular inverse transpose: L^{-T} = [[i11, i12], [0, i22]].
  const double i11 = 1.0 / L.l11;
  const double i22 = 1.0 / L.l22;
  const double i12 = -L.l21 / (L.l11 * L.l22);

  // M = A * L^{-T}
  const double m11 = A.a11 * i11;
  const double m12 = A.a11 * i12 + A.a12 * i22;
  const double m21 = A.a21 * i11;
  const double m22 = A.a21 * i12 + A.a22 * i22;

  // B = L^T * M; symmetric exactly when A is self-adjoint w.r.t. G.
  const double b11 = L.l11 * m11 + L.l21 * m21;
  const double b12 = L.l11 * m12 + L.l21 * m22;
  const double b21 = L.l22 * m21;
  const double b22 = L.l22 * m22;

  const double scale = std::max(
      {1.0, std::abs(b11), std::abs(b12), std::abs(b21), std::abs(b22)});
  if (std::abs(b12 - b21) > selfadj_tol * scale) {
    throw DomainError("operator not self-adjoint for the given metric",
                      std::abs(b12 - b21));
  }

  const double s = 0.5 * (b12 + b21);
  const double mean = 0.5 * (b11 + b22);
  const double half = 0.5 * (b11 - b22);
  const double disc = std::sqrt(half * half + s * s);

  EigPair out;
  out.kappa1 = mean + disc;
  out.kappa2 = mean - disc;
  out.umbilic = disc <= 1e-12 * scale;

  std::array<double, 2> w1{}, w2{};
  if (out.umbilic) {
    w1 = {1.0, 0.0};
    w2 = {0.0, 1.0};
  } else {
    // Pick the better-conditioned column of (B - kappa1 I).
    std::array<double, 2> c1{s, out.kappa1 - b11};
    std::array<double, 2> c2{out.kappa1 - b22, s};
    const double n1 = std::hypot(c1[0], c1[1]);
    const double n2 = std::hypot(c2[0], c2[1]);
    w1 = n1 >= n2 ? std::array<double, 2>{c1[0] / n1, c1[1] / n1}
                  : std::array<double, 2>{c2[0] / n2, c2[1] / n2};
    w2 = {-w1[1], w1[0]};
  }

  // Back-substitution v = L^{-T} w keeps the pair G-orthonormal.
  out.dir1 = {i11 * w1[0] + i12 * w1[1], i22 * w1[1]};
  out.dir2 = {i11 * w2[0] + i12 * w2[1], i22 * w2[1]};
  return out;
}

}  // namespace cpdsurf
