#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cpdsurf/errors.hpp"
#include "cpdsurf/ode.hpp"

using namespace cpdsurf;

TEST_CASE("exponential growth") {
  Trajectory tr = ode_rk_adaptive(
      [](double, const std::vector<double>& y) {
        return std::vector<double>{y[0]};
      },
      {1.0}, {0.0, 1.0}, 1e-12);
  CHECK(tr.nodes.back().y[0] ==
        doctest::Approx(2.718281828459045).epsilon(1e-11));
  // dense output between accepted steps
  CHECK(tr.eval(0.5)[0] == doctest::Approx(std::exp(0.5)).epsilon(1e-7));
  CHECK(tr.t_begin() == 0.0);
}

TEST_CASE("quadrature as an ODE") {
  Trajectory tr = ode_rk_adaptive(
      [](double t, const std::vector<double>&) {
        return std::vector<double>{std::cos(t)};
      },
      {0.0}, {0.0, std::numbers::pi}, 1e-12);
  CHECK(std::abs(tr.nodes.back().y[0]) < 1e-10);  // sin(pi)
}

TEST_CASE("coupled system preserves a first integral") {
  // y'' = -y as a system; energy y^2 + v^2 stays 1
  Trajectory tr = ode_rk_adaptive(
      [](double, const std::vector<double>& y) {
        return std::vector<double>{y[1], -y[0]};
      },
      {1.0, 0.0}, {0.0, 10.0}, 1e-12);
  for (const auto& n : tr.nodes) {
    CHECK(n.y[0] * n.y[0] + n.y[1] * n.y[1] ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(tr.nodes.back().y[0] == doctest::Approx(std::cos(10.0)).epsilon(1e-9));
}

TEST_CASE("rhs failure carries a location") {
  try {
    ode_rk_adaptive(
        [](double t, const std::vector<double>&) {
          if (t > 0.7) throw OdeError("field left its chart", t);
          return std::vector<double>{1.0};
        },
        {0.0}, {0.0, 2.0}, 1e-10);
    FAIL_CHECK("expected the right-hand side abort to propagate");
  } catch (const OdeError& e) {
    CHECK(e.location() > 0.65);
    CHECK(e.location() < 1.1);
  }
}

TEST_CASE("blow-up forces step underflow") {
  // y' = y^2 from y(0)=1 explodes at t=1
  CHECK_THROWS_AS(ode_rk_adaptive(
                      [](double, const std::vector<double>& y) {
                        return std::vector<double>{y[0] * y[0]};
                      },
                      {1.0}, {0.0, 2.0}, 1e-10),
                  OdeError);
}
