#include "cpdsurf/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "cpdsurf/eig2.hpp"
#include "cpdsurf/errors.hpp"
#include "cpdsurf/geometry.hpp"
#include "cpdsurf/parallel.hpp"

namespace cpdsurf {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kFdStep = 1e-5;
constexpr double kMinimalH = 1e-7;  // measured-minimal detection threshold

enum Slot : int {
  kTransport = 0,
  kDcos,
  kGradTheta,
  kDecompUnit,
  kSelfAdjoint,
  kCurvConsistency,
  kCodazzi,
  kCanMetric,
  kCanShapeDiag,
  kCanShapeValues,
  kCanCompatOde,
  kOrthCompatPde,
  kMinAnglePde,
  kLogTanHarmonic,
  kSlotCount
};

constexpr const char* kSlotIds[kSlotCount] = {
    "prop1.transport",      "prop1.dcos",
    "prop1.gradtheta",      "decomp.unit",
    "shape.selfadjoint",    "curv.consistency",
    "codazzi.invariant",    "canonical.metric",
    "canonical.shape_diag", "canonical.shape_values",
    "canonical.compat_ode", "orthogonal.compat_pde",
    "minimal.angle_pde",    "minimal.log_tan_harmonic"};

struct PointData {
  bool masked = true;
  double abs_H = kNaN;
  std::array<double, kSlotCount> r{};
};

double mask_distance(double theta) {
  return std::min({std::abs(theta), std::abs(theta - kPi / 2),
                   std::abs(theta - kPi)});
}

double grad_component_x(const SurfaceFrame& fr, double vx, double vy) {
  double det = fr.E.val * fr.G.val - fr.F.val * fr.F.val;
  return (fr.G.val * vx - fr.F.val * vy) / det;
}

double grad_component_y(const SurfaceFrame& fr, double vx, double vy) {
  double det = fr.E.val * fr.G.val - fr.F.val * fr.F.val;
  return (fr.E.val * vy - fr.F.val * vx) / det;
}

double beta_x_of(const SurfaceFrame& fr) {
  return fr.G.dx / (2.0 * std::sqrt(fr.G.val));
}

void eval_point(const ParamSurface& S, const FixedDirection& k, double x,
                double y, double mask_radius, PointData& out) {
  SurfaceFrame fr = frame_at(S, x, y, k);
  out.r.fill(kNaN);
  out.masked = mask_distance(fr.theta.val) < mask_radius;
  if (out.masked) return;
  out.abs_H = std::abs(fr.A.trace() / 2.0);

  double c = fr.cos_theta.val;
  double s = std::sin(fr.theta.val);
  double u1 = fr.u1.val, u2 = fr.u2.val;
  double w1 = fr.A.a11 * u1 + fr.A.a12 * u2;
  double w2 = fr.A.a21 * u1 + fr.A.a22 * u2;

  {
    double t1 = fr.u1.dx + u1 * fr.gamma.xxx + u2 * fr.gamma.xxy -
                c * fr.A.a11;
    double t2 = fr.u2.dx + u1 * fr.gamma.yxx + u2 * fr.gamma.yxy -
                c * fr.A.a21;
    double s1 = fr.u1.dy + u1 * fr.gamma.xxy + u2 * fr.gamma.xyy -
                c * fr.A.a12;
    double s2 = fr.u2.dy + u1 * fr.gamma.yxy + u2 * fr.gamma.yyy -
                c * fr.A.a22;
    out.r[kTransport] = std::max(std::sqrt(fr.gnorm2(t1, t2)),
                                 std::sqrt(fr.gnorm2(s1, s2)));
  }
  out.r[kDcos] = std::max(
      std::abs(fr.cos_theta.dx + fr.E.val * w1 + fr.F.val * w2),
      std::abs(fr.cos_theta.dy + fr.F.val * w1 + fr.G.val * w2));
  {
    double gx = grad_component_x(fr, fr.theta.dx, fr.theta.dy);
    double gy = grad_component_y(fr, fr.theta.dx, fr.theta.dy);
    out.r[kGradTheta] =
        std::sqrt(fr.gnorm2(w1 - s * gx, w2 - s * gy));
  }
  out.r[kDecompUnit] = std::abs(fr.gnorm2(u1, u2) + c * c - 1.0);
  out.r[kSelfAdjoint] =
      std::abs(fr.F.val * fr.A.a11 + fr.G.val * fr.A.a21 -
               fr.E.val * fr.A.a12 - fr.F.val * fr.A.a22);
  {
    // Never throws at this tolerance; a self-adjointness defect shows up in
    // the dedicated check instead.
    EigPair eig = eig_sym_generalized(fr.A, {fr.E.val, fr.F.val, fr.G.val},
                                      1e100);
    double det_A = fr.A.det();
    double det_forms =
        (fr.e * fr.g2 - fr.f * fr.f) / fr.W2();
    out.r[kCurvConsistency] = std::max(
        {std::abs(det_A - eig.kappa1 * eig.kappa2),
         std::abs(fr.A.trace() / 2.0 - (eig.kappa1 + eig.kappa2) / 2.0),
         std::abs(det_A - det_forms)});
  }
  out.r[kCodazzi] = codazzi_residual(S, x, y, kFdStep);

  bool canonical = S.kind == CoordKind::canonical;
  bool orthogonal_adapted = S.kind == CoordKind::prop2_adapted ||
                            S.kind == CoordKind::isothermal_minimal;
  if (!canonical && !orthogonal_adapted) return;

  double beta = std::sqrt(fr.G.val);
  double beta_x = beta_x_of(fr);
  SurfaceFrame fxp = frame_at(S, x + kFdStep, y, k);
  SurfaceFrame fxm = frame_at(S, x - kFdStep, y, k);
  double beta_xx = (beta_x_of(fxp) - beta_x_of(fxm)) / (2.0 * kFdStep);
  double theta_xx = (fxp.theta.dx - fxm.theta.dx) / (2.0 * kFdStep);

  if (canonical) {
    out.r[kCanMetric] =
        std::max(std::abs(fr.E.val - 1.0), std::abs(fr.F.val));
    out.r[kCanShapeDiag] =
        std::max(std::abs(fr.A.a12), std::abs(fr.A.a21));
    double t = std::tan(fr.theta.val);
    out.r[kCanShapeValues] =
        std::max(std::abs(fr.A.a11 - fr.theta.dx),
                 std::abs(fr.A.a22 - t * beta_x / beta));
    out.r[kCanCompatOde] =
        std::abs(beta_xx + t * fr.theta.dx * beta_x);
    return;
  }

  SurfaceFrame fyp = frame_at(S, x, y + kFdStep, k);
  SurfaceFrame fym = frame_at(S, x, y - kFdStep, k);
  double theta_yy = (fyp.theta.dy - fym.theta.dy) / (2.0 * kFdStep);
  double beta_y = fr.G.dy / (2.0 * beta);
  double tx = fr.theta.dx, ty = fr.theta.dy;
  out.r[kOrthCompatPde] = std::abs(
      (s * s / c) * (beta_xx / beta) + (s * tx / (c * c)) * (beta_x / beta) +
      (ty / s) * (beta_y / (beta * beta * beta)) +
      (2.0 * c * ty * ty / (s * s) - theta_yy / s) / (beta * beta));
  if (S.kind == CoordKind::isothermal_minimal) {
    out.r[kMinAnglePde] =
        std::abs(c * (tx * tx + ty * ty) - s * (theta_xx + theta_yy));
  }
}

double slot_tolerance(Slot slot, const Tolerances& tols, bool chained) {
  double tol = tols.first_order;
  switch (slot) {
    case kCurvConsistency:
      tol = tols.curvature_consistency;
      break;
    case kCodazzi:
      tol = tols.codazzi_hard;
      break;
    case kCanShapeValues:
    case kCanCompatOde:
    case kOrthCompatPde:
    case kMinAnglePde:
    case kLogTanHarmonic:
      tol = tols.second_order;
      break;
    default:
      break;
  }
  if (chained && slot != kCodazzi) tol = std::max(tol, tols.chained_chart);
  return tol;
}

}  // namespace

VerificationReport verify_surface(const ParamSurface& S,
                                  const FixedDirection& k,
                                  const GridSpec& grid,
                                  const Tolerances& tols) {
  grid.validate();
  VerificationReport report;
  report.surface = S.name;
  report.coord_kind = coord_kind_name(S.kind);
  report.grid = grid;
  report.mask_radius = tols.mask_radius;
  report.warnings = S.warnings;

  std::vector<double> xs = grid.xs(S.domain);
  std::vector<double> ys = grid.ys(S.domain);
  std::size_t n = xs.size() * ys.size();
  report.total_points = n;

  std::vector<PointData> pts(n);
  parallel_for(n, [&](std::size_t idx) {
    std::size_t j = idx / xs.size(), i = idx % xs.size();
    eval_point(S, k, xs[i], ys[j], tols.mask_radius, pts[idx]);
  });

  std::size_t unmasked = 0;
  double max_abs_H = 0.0;
  for (const auto& p : pts) {
    if (p.masked) continue;
    ++unmasked;
    max_abs_H = std::max(max_abs_H, p.abs_H);
  }
  report.masked_points = n - unmasked;
  if (unmasked == 0) {
    report.degenerate = "constant angle";
    return report;
  }

  std::vector<double> logtan(n, kNaN);
  if (max_abs_H < kMinimalH) {
    parallel_for(n, [&](std::size_t idx) {
      if (pts[idx].masked) return;
      std::size_t j = idx / xs.size(), i = idx % xs.size();
      auto grad = [](const SurfaceFrame& fr) -> std::array<double, 2> {
        double s = std::sin(fr.theta.val);
        return {fr.theta.dx / s, fr.theta.dy / s};
      };
      logtan[idx] = std::abs(
          laplace_beltrami_fd(S, xs[i], ys[j], grad, k, kFdStep));
    });
    for (std::size_t idx = 0; idx < n; ++idx)
      pts[idx].r[kLogTanHarmonic] = logtan[idx];
  }

  for (int slot = 0; slot < kSlotCount; ++slot) {
    double worst = -1.0, sum = 0.0;
    std::size_t count = 0, worst_idx = 0;
    for (std::size_t idx = 0; idx < n; ++idx) {
      double v = pts[idx].r[slot];
      if (std::isnan(v)) continue;
      ++count;
      sum += v;
      if (v > worst) {
        worst = v;
        worst_idx = idx;
      }
    }
    if (count == 0) continue;
    CheckRecord rec;
    rec.id = kSlotIds[slot];
    rec.max_residual = worst;
    rec.mean_residual = sum / static_cast<double>(count);
    rec.worst_x = xs[worst_idx % xs.size()];
    rec.worst_y = ys[worst_idx / xs.size()];
    rec.tolerance = slot_tolerance(static_cast<Slot>(slot), tols,
                                   S.chained_chart);
    rec.pass = worst <= rec.tolerance;
    if (slot == kCodazzi) {
      rec.advisory_tolerance = tols.codazzi_advisory;
      rec.advisory_pass = worst <= rec.advisory_tolerance;
    }
    report.checks.push_back(std::move(rec));
  }
  return report;
}

Classification classify(const ParamSurface& S, const GridSpec& grid,
                        const Tolerances& tols) {
  grid.validate();
  std::vector<double> xs = grid.xs(S.domain);
  std::vector<double> ys = grid.ys(S.domain);
  std::size_t n = xs.size() * ys.size();

  struct Row {
    double H, K, gap, theta;
    double theta_y = kNaN, align = kNaN;  // NaN when angle-degenerate
  };
  std::vector<Row> rows(n);
  parallel_for(n, [&](std::size_t idx) {
    std::size_t j = idx / xs.size(), i = idx % xs.size();
    SurfaceFrame fr = frame_at(S, xs[i], ys[j]);
    Row& row = rows[idx];
    row.H = fr.A.trace() / 2.0;
    row.K = fr.A.det();
    EigPair eig = eig_sym_generalized(fr.A, {fr.E.val, fr.F.val, fr.G.val},
                                      1e100);
    row.gap = std::abs(eig.kappa1 - eig.kappa2);
    row.theta = fr.theta.val;
    if (std::min(fr.theta.val, kPi - fr.theta.val) < tols.mask_radius)
      return;
    row.theta_y = std::abs(fr.theta.dy);
    double u1 = fr.u1.val, u2 = fr.u2.val;
    double w1 = fr.A.a11 * u1 + fr.A.a12 * u2;
    double w2 = fr.A.a21 * u1 + fr.A.a22 * u2;
    double nu = std::sqrt(fr.gnorm2(u1, u2));
    double nw = std::sqrt(fr.gnorm2(w1, w2));
    double area = std::abs(u1 * w2 - u2 * w1) * std::sqrt(fr.W2());
    row.align = (nu < 1e-14 || nw < 1e-14) ? 0.0 : area / (nu * nw);
  });

  Classification out;
  out.adapted_chart = S.kind == CoordKind::canonical;
  double h_lo = rows[0].H, h_hi = rows[0].H;
  double t_lo = rows[0].theta, t_hi = rows[0].theta;
  double h_sum = 0.0;
  std::size_t angle_ok = 0;
  for (const auto& row : rows) {
    out.max_abs_H = std::max(out.max_abs_H, std::abs(row.H));
    out.max_abs_K = std::max(out.max_abs_K, std::abs(row.K));
    out.kappa_gap = std::max(out.kappa_gap, row.gap);
    h_lo = std::min(h_lo, row.H);
    h_hi = std::max(h_hi, row.H);
    t_lo = std::min(t_lo, row.theta);
    t_hi = std::max(t_hi, row.theta);
    h_sum += row.H;
    if (!std::isnan(row.theta_y)) {
      ++angle_ok;
      out.max_theta_y = std::max(out.max_theta_y, row.theta_y);
      out.max_alignment = std::max(out.max_alignment, row.align);
    }
  }
  out.theta_spread = t_hi - t_lo;
  out.minimal = out.max_abs_H < kMinimalH;
  out.flat = out.max_abs_K < 1e-9;
  out.umbilic = out.kappa_gap < 1e-8;
  out.constant_angle = out.theta_spread < 1e-9;
  out.cpd = out.adapted_chart && angle_ok > 0 &&
            out.max_theta_y < tols.first_order &&
            out.max_alignment < tols.first_order;
  double h_mean = h_sum / static_cast<double>(n);
  if (h_hi - h_lo < tols.second_order) out.cmc = h_mean;
  if (out.minimal && out.flat && !out.constant_angle)
    throw Error(
        "inconsistent measurements: a minimal flat surface in this family "
        "must have constant angle, but the sampled angle varies");
  return out;
}

}  // namespace cpdsurf
