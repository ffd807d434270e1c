#include <doctest.h>

#include <cmath>

#include "cpdsurf/eig2.hpp"
#include "cpdsurf/errors.hpp"

using namespace cpdsurf;

namespace {

double g_inner(const Sym2& G, const std::array<double, 2>& u,
               const std::array<double, 2>& v) {
  return G.a11 * u[0] * v[0] + G.a12 * (u[0] * v[1] + u[1] * v[0]) +
         G.a22 * u[1] * v[1];
}

}  // namespace

TEST_CASE("symmetric matrix, euclidean metric") {
  Mat2 A{0.3, 0.4, 0.4, -0.3};
  EigPair e = eig_sym_generalized(A, Sym2{1.0, 0.0, 1.0});
  CHECK(e.kappa1 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(e.kappa2 == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(!e.umbilic);
  CHECK(std::abs(g_inner({1, 0, 1}, e.dir1, e.dir2)) < 1e-10);
  for (int i = 0; i < 2; ++i) {
    auto v = i == 0 ? e.dir1 : e.dir2;
    double k = i == 0 ? e.kappa1 : e.kappa2;
    auto Av = A.apply(v);
    CHECK(std::abs(Av[0] - k * v[0]) < 1e-9);
    CHECK(std::abs(Av[1] - k * v[1]) < 1e-9);
  }
}

TEST_CASE("generalized problem with a non-euclidean metric") {
  Sym2 G{2.0, 0.3, 1.0};
  // A = G^{-1} S with S symmetric, hence self-adjoint for g
  double s11 = 1.0, s12 = 0.2, s22 = 3.0;
  double det = G.det();
  Mat2 A{(G.a22 * s11 - G.a12 * s12) / det, (G.a22 * s12 - G.a12 * s22) / det,
         (G.a11 * s12 - G.a12 * s11) / det, (G.a11 * s22 - G.a12 * s12) / det};
  EigPair e = eig_sym_generalized(A, G);
  CHECK(e.kappa1 > e.kappa2);
  CHECK(std::abs(g_inner(G, e.dir1, e.dir2)) < 1e-10);
  CHECK(g_inner(G, e.dir1, e.dir1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g_inner(G, e.dir2, e.dir2) == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 0; i < 2; ++i) {
    auto v = i == 0 ? e.dir1 : e.dir2;
    double k = i == 0 ? e.kappa1 : e.kappa2;
    auto Av = A.apply(v);
    CHECK(std::abs(Av[0] - k * v[0]) < 1e-9);
    CHECK(std::abs(Av[1] - k * v[1]) < 1e-9);
  }
  // invariants survive the similarity transform
  CHECK(e.kappa1 * e.kappa2 == doctest::Approx(A.det()).epsilon(1e-12));
  CHECK(e.kappa1 + e.kappa2 == doctest::Approx(A.trace()).epsilon(1e-12));
}

TEST_CASE("umbilic detection") {
  EigPair e = eig_sym_generalized(Mat2{0.7, 0.0, 0.0, 0.7},
                                  Sym2{3.0, 0.5, 2.0});
  CHECK(e.umbilic);
  CHECK(e.kappa1 == doctest::Approx(0.7));
  CHECK(e.kappa2 == doctest::Approx(0.7));
}

TEST_CASE("rejects broken inputs") {
  CHECK_THROWS_AS(
      eig_sym_generalized(Mat2{0.0, 1.0, 0.0, 0.0}, Sym2{1.0, 0.0, 1.0}),
      DomainError);
  CHECK_THROWS_AS(
      eig_sym_generalized(Mat2{1.0, 0.0, 0.0, 1.0}, Sym2{1.0, 2.0, 1.0}),
      DomainError);
}

TEST_CASE("helicoid shape operator values") {
  // at u=1: A maps via I^{-1} II with E=1, F=0, G=2, e=g=0, f=-1/sqrt(2)
  double f = -1.0 / std::sqrt(2.0);
  Mat2 A{0.0, f, f / 2.0, 0.0};
  EigPair e = eig_sym_generalized(A, Sym2{1.0, 0.0, 2.0});
  CHECK(e.kappa1 == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(e.kappa2 == doctest::Approx(-0.5).epsilon(1e-13));
}
