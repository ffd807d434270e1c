#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpdsurf/surface.hpp"

namespace cpdsurf {

struct Tolerances {
  double first_order = 1e-6;   // identities evaluated from exact jets
  double second_order = 1e-5;  // quadrature- or difference-backed residuals
  double curvature_consistency = 1e-9;
  double codazzi_hard = 1e-4;
  double codazzi_advisory = 1e-6;
  double chained_chart = 1e-4;  // floor applied to reparametrized charts
  double mask_radius = 1e-6;    // angle distance to {0, pi/2, pi}
};

struct CheckRecord {
  std::string id;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double worst_x = 0.0, worst_y = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  // Set only for checks that also carry a stricter advisory threshold.
  double advisory_tolerance = 0.0;
  bool advisory_pass = true;
};

struct VerificationReport {
  std::string surface;
  std::string coord_kind;
  GridSpec grid;
  std::size_t total_points = 0;
  std::size_t masked_points = 0;
  double mask_radius = 0.0;
  std::string degenerate;  // "constant angle" when every point is masked
  std::vector<std::string> warnings;
  std::vector<CheckRecord> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckRecord* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

// Runs every applicable residual check over the grid. Points whose angle is
// within mask_radius of {0, pi/2, pi} are excluded and counted. Check set:
//   always        prop1.transport, prop1.dcos, prop1.gradtheta, decomp.unit,
//                 shape.selfadjoint, curv.consistency, codazzi.invariant
//   canonical     canonical.metric, canonical.shape_diag,
//                 canonical.shape_values, canonical.compat_ode
//   prop2-adapted / isothermal-minimal    orthogonal.compat_pde
//   isothermal-minimal                    minimal.angle_pde
//   any surface measured minimal          minimal.log_tan_harmonic
VerificationReport verify_surface(const ParamSurface& S,
                                  const FixedDirection& k = {},
                                  const GridSpec& grid = {},
                                  const Tolerances& tols = {});

struct Classification {
  bool minimal = false;
  bool flat = false;
  bool cpd = false;
  bool constant_angle = false;
  bool umbilic = false;
  std::optional<double> cmc;

  bool adapted_chart = false;
  double max_abs_H = 0.0;
  double max_abs_K = 0.0;
  double kappa_gap = 0.0;
  double theta_spread = 0.0;
  double max_theta_y = 0.0;
  double max_alignment = 0.0;
};

// Thresholded flags over the grid. Throws on the impossible combination
// minimal && flat && nonconstant angle.
Classification classify(const ParamSurface& S, const GridSpec& grid = {},
                        const Tolerances& tols = {});

}  // namespace cpdsurf
