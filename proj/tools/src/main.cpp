#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cpdsurf/cpd.hpp"
#include "cpdsurf/errors.hpp"
#include "cpdsurf/gallery.hpp"
#include "cpdsurf/mesh.hpp"
#include "cpdsurf/spec_io.hpp"
#include "cpdsurf/verify.hpp"

namespace {

using namespace cpdsurf;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerifyFail = 2;

struct Options {
  int nx = 41, ny = 41;
  std::string out;
  std::string format;
  double tol = 0.0;
  bool tol_set = false;

  std::string gallery_name;
  std::string spec_path;
  double H = 0.0, psi0 = 0.0, theta0 = 0.0, phi0 = 0.0;
  std::string span;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--nx", o.nx, "grid columns")->check(CLI::Range(2, 100000));
  sub->add_option("--ny", o.ny, "grid rows")->check(CLI::Range(2, 100000));
  sub->add_option("--out", o.out, "output file (default: standard output)");
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"obj", "ply", "csv", "json"}));
  sub->add_option("--tol", o.tol, "tolerance override for verification")
      ->check(CLI::PositiveNumber);
}

void emit_warnings(const ParamSurface& S) {
  for (const auto& w : S.warnings) std::cerr << "warning: " << w << '\n';
}

void with_output(const std::string& path,
                 const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ValidationError("cannot open output file: " + path);
  body(os);
  os.flush();
  if (!os) throw ValidationError("failed writing output file: " + path);
}

Tolerances make_tolerances(const Options& o) {
  Tolerances t;
  if (o.tol_set) {
    t.first_order = o.tol;
    t.second_order = o.tol;
    t.curvature_consistency = o.tol;
    t.codazzi_hard = o.tol;
    t.codazzi_advisory = std::min(t.codazzi_advisory, o.tol);
    t.chained_chart = o.tol;
  }
  return t;
}

int write_mesh(const ParamSurface& S, const Options& o) {
  emit_warnings(S);
  std::string fmt = o.format.empty() ? "obj" : o.format;
  std::size_t nx = static_cast<std::size_t>(o.nx);
  std::size_t ny = static_cast<std::size_t>(o.ny);
  if (fmt == "obj") {
    MeshGrid mesh = sample_mesh(S, nx, ny);
    with_output(o.out, [&](std::ostream& os) { write_obj(os, mesh); });
  } else if (fmt == "ply") {
    MeshGrid mesh = sample_mesh(S, nx, ny);
    with_output(o.out, [&](std::ostream& os) { write_ply(os, mesh); });
  } else if (fmt == "csv") {
    auto rows = sample_rows(S, nx, ny);
    with_output(o.out, [&](std::ostream& os) { write_csv(os, rows); });
  } else {
    throw ValidationError("format \"" + fmt +
                          "\" does not describe a mesh; use obj, ply or csv");
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  ParamSurface S = surface_from_spec_file(o.spec_path);
  emit_warnings(S);
  if (!o.format.empty() && o.format != "json")
    throw ValidationError("verify reports are JSON; drop --format or use json");
  GridSpec grid;
  grid.nx = o.nx;
  grid.ny = o.ny;
  VerificationReport report = verify_surface(S, {}, grid, make_tolerances(o));
  with_output(o.out, [&](std::ostream& os) { os << report_to_json(report); });
  if (!report.all_pass()) {
    std::cerr << "verification failed: ";
    for (const auto& c : report.checks)
      if (!c.pass) std::cerr << c.id << ' ';
    std::cerr << '\n';
    return kExitVerifyFail;
  }
  return kExitOk;
}

int run_classify(const Options& o) {
  ParamSurface S = surface_from_spec_file(o.spec_path);
  emit_warnings(S);
  if (!o.format.empty() && o.format != "json")
    throw ValidationError(
        "classification reports are JSON; drop --format or use json");
  GridSpec grid;
  grid.nx = o.nx;
  grid.ny = o.ny;
  Classification c = classify(S, grid, make_tolerances(o));
  with_output(o.out,
              [&](std::ostream& os) { os << classification_to_json(c, S.name); });
  return kExitOk;
}

int run_sample(const Options& o) {
  ParamSurface S = surface_from_spec_file(o.spec_path);
  emit_warnings(S);
  if (!o.format.empty() && o.format != "csv")
    throw ValidationError("sample emits CSV; drop --format or use csv");
  auto rows = sample_rows(S, static_cast<std::size_t>(o.nx),
                          static_cast<std::size_t>(o.ny));
  with_output(o.out, [&](std::ostream& os) { write_csv(os, rows); });
  return kExitOk;
}

int run_cmc(const Options& o) {
  auto comma = o.span.find(',');
  if (comma == std::string::npos)
    throw ValidationError("--span expects \"a,b\"");
  double lo = 0.0, hi = 0.0;
  try {
    std::size_t used = 0;
    lo = std::stod(o.span.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    std::string rest = o.span.substr(comma + 1);
    hi = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ValidationError("--span expects \"a,b\" with numeric endpoints");
  }
  if (!o.format.empty() && o.format != "csv")
    throw ValidationError("cmc emits a CSV profile; drop --format or use csv");
  CmcProfile prof = cmc_profile(o.H, o.psi0, o.theta0, o.phi0, {lo, hi});
  with_output(o.out, [&](std::ostream& os) {
    os << "x,theta,phi\n";
    char buf[128];
    for (std::size_t i = 0; i < prof.xs.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", prof.xs[i],
                    prof.thetas[i], prof.phis[i]);
      os << buf;
    }
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "constructs, verifies, classifies and samples surfaces whose fixed "
      "ambient direction projects to a principal direction"};
  app.require_subcommand(1);
  Options o;

  CLI::App* g = app.add_subcommand("gallery", "export a named example surface");
  g->add_option("name", o.gallery_name, "surface name")->required();
  add_common(g, o);

  CLI::App* con =
      app.add_subcommand("construct", "build a surface from a JSON spec");
  con->add_option("spec", o.spec_path, "spec file")->required();
  add_common(con, o);

  CLI::App* ver =
      app.add_subcommand("verify", "run residual checks over a grid");
  ver->add_option("spec", o.spec_path, "spec file")->required();
  add_common(ver, o);

  CLI::App* cls =
      app.add_subcommand("classify", "measure curvature/angle flags");
  cls->add_option("spec", o.spec_path, "spec file")->required();
  add_common(cls, o);

  CLI::App* cmc =
      app.add_subcommand("cmc", "integrate a constant-mean-curvature profile");
  cmc->add_option("--H", o.H, "mean curvature")->required();
  cmc->add_option("--psi0", o.psi0, "constant profile offset")->required();
  cmc->add_option("--theta0", o.theta0, "initial angle")->required();
  cmc->add_option("--phi0", o.phi0, "initial profile value")->required();
  cmc->add_option("--span", o.span, "integration interval a,b")->required();
  add_common(cmc, o);

  CLI::App* smp = app.add_subcommand("sample", "tabulate grid samples as CSV");
  smp->add_option("spec", o.spec_path, "spec file")->required();
  add_common(smp, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }
  for (CLI::App* sub : {g, con, ver, cls, cmc, smp})
    if (sub->count("--tol") > 0) o.tol_set = true;

  try {
    if (app.got_subcommand(g)) return write_mesh(gallery(o.gallery_name), o);
    if (app.got_subcommand(con))
      return write_mesh(surface_from_spec_file(o.spec_path), o);
    if (app.got_subcommand(ver)) return run_verify(o);
    if (app.got_subcommand(cls)) return run_classify(o);
    if (app.got_subcommand(cmc)) return run_cmc(o);
    if (app.got_subcommand(smp)) return run_sample(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
