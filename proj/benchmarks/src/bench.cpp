#include <benchmark/benchmark.h>

#include <cmath>

#include "cpdsurf/cpd.hpp"
#include "cpdsurf/expr.hpp"
#include "cpdsurf/gallery.hpp"
#include "cpdsurf/geometry.hpp"
#include "cpdsurf/quadrature.hpp"
#include "cpdsurf/verify.hpp"

namespace {

using namespace cpdsurf;

void BM_ExprJet(benchmark::State& state) {
  Expr e = Expr::parse("2*atan(exp(-x))+0.1*cos(y)");
  double x = 0.3, y = 1.1;
  for (auto _ : state) {
    Jet2 v = e.jet(x, y);
    benchmark::DoNotOptimize(v);
    x += 1e-9;  // defeat value caching across iterations
  }
}
BENCHMARK(BM_ExprJet);

void BM_FrameCatenoidCpd(benchmark::State& state) {
  ParamSurface S = catenoid_cpd(1.0);
  double x = 1.2;
  for (auto _ : state) {
    SurfaceFrame fr = frame_at(S, x, 0.7);
    benchmark::DoNotOptimize(fr);
    x += 1e-9;
  }
}
BENCHMARK(BM_FrameCatenoidCpd);

void BM_QuadAdaptive(benchmark::State& state) {
  auto f = [](double t) { return std::cos(2.0 * std::atan(std::exp(-t))); };
  for (auto _ : state) {
    double v = quad_adaptive(f, 0.0, 2.0, 1e-10);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_QuadAdaptive);

void BM_BuildCase1Eval(benchmark::State& state) {
  Case1Spec spec;
  spec.theta = Expr::parse("2*atan(exp(-x))");
  spec.psi = Expr::parse("0.2");
  spec.domain = {{-1.0, 1.0}, {0.0, 2.0}};
  ParamSurface S = build_case1(spec);
  double x = -0.4;
  for (auto _ : state) {
    Vec3<Jet2> r = S.at(Jet2::var_x(x), Jet2::var_y(0.9));
    benchmark::DoNotOptimize(r);
    x += 1e-9;
  }
}
BENCHMARK(BM_BuildCase1Eval);

void BM_VerifyGrid(benchmark::State& state) {
  ParamSurface S = catenoid_cpd(1.0);
  GridSpec grid{int(state.range(0)), int(state.range(0)), 0.0};
  for (auto _ : state) {
    VerificationReport rep = verify_surface(S, {}, grid);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_VerifyGrid)->Arg(9)->Arg(17);

}  // namespace

BENCHMARK_MAIN();
