#include "cpdsurf/spec_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cpdsurf/cpd.hpp"
#include "cpdsurf/errors.hpp"
#include "cpdsurf/gallery.hpp"

namespace cpdsurf {
namespace {

using ordered_json = nlohmann::ordered_json;

const nlohmann::json& require(const nlohmann::json& doc, const char* kind,
                              const char* field) {
  auto it = doc.find(field);
  if (it == doc.end())
    throw ValidationError(std::string("spec: kind \"") + kind +
                          "\" requires field \"" + field + "\"");
  return *it;
}

std::string as_string(const nlohmann::json& v, const char* field) {
  if (!v.is_string())
    throw ValidationError(std::string("spec: field \"") + field +
                          "\" must be a string");
  return v.get<std::string>();
}

double as_number(const nlohmann::json& v, const char* field) {
  if (!v.is_number())
    throw ValidationError(std::string("spec: field \"") + field +
                          "\" must be a number");
  return v.get<double>();
}

Expr parse_field(const nlohmann::json& v, const char* field) {
  return Expr::parse(as_string(v, field));
}

Interval interval_from(const nlohmann::json& v, const char* field) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number())
    throw ValidationError(std::string("spec: \"") + field +
                          "\" must be [lo, hi]");
  Interval iv{v[0].get<double>(), v[1].get<double>()};
  iv.validate(field);
  return iv;
}

Rect rect_from(const nlohmann::json& v) {
  if (!v.is_object())
    throw ValidationError(
        "spec: \"domain\" must be {\"x\": [lo, hi], \"y\": [lo, hi]}");
  auto x = v.find("x");
  auto y = v.find("y");
  if (x == v.end() || y == v.end())
    throw ValidationError("spec: \"domain\" needs both \"x\" and \"y\"");
  return Rect{interval_from(*x, "domain.x"), interval_from(*y, "domain.y")};
}

ordered_json check_to_json(const CheckRecord& c) {
  ordered_json j;
  j["id"] = c.id;
  j["max_residual"] = c.max_residual;
  j["mean_residual"] = c.mean_residual;
  j["worst_point"] = {c.worst_x, c.worst_y};
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  if (c.advisory_tolerance > 0.0) {
    j["advisory_tolerance"] = c.advisory_tolerance;
    j["advisory_pass"] = c.advisory_pass;
  }
  return j;
}

}  // namespace

ParamSurface surface_from_spec_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("spec must be a JSON object");

  std::string kind = as_string(require(doc, "?", "kind"), "kind");
  if (kind == "case1") {
    Case1Spec spec;
    spec.theta = parse_field(require(doc, "case1", "theta"), "theta");
    spec.psi = doc.contains("psi") ? parse_field(doc["psi"], "psi")
                                   : Expr::parse("0");
    spec.domain = rect_from(require(doc, "case1", "domain"));
    if (doc.contains("quad_tol"))
      spec.quad_tol = as_number(doc["quad_tol"], "quad_tol");
    if (doc.contains("phi0")) spec.phi0 = as_number(doc["phi0"], "phi0");
    if (doc.contains("name")) spec.name = as_string(doc["name"], "name");
    return build_case1(spec);
  }
  if (kind == "case2") {
    Case2Spec spec;
    spec.theta = parse_field(require(doc, "case2", "theta"), "theta");
    if (doc.contains("y0")) spec.y0 = as_number(doc["y0"], "y0");
    spec.domain = rect_from(require(doc, "case2", "domain"));
    if (doc.contains("quad_tol"))
      spec.quad_tol = as_number(doc["quad_tol"], "quad_tol");
    if (doc.contains("name")) spec.name = as_string(doc["name"], "name");
    return build_case2(spec);
  }
  if (kind == "catenoid") {
    double c = as_number(require(doc, "catenoid", "c"), "c");
    if (doc.contains("domain")) return catenoid_cpd(c, rect_from(doc["domain"]));
    return catenoid_cpd(c);
  }
  if (kind == "sphere") {
    double a = as_number(require(doc, "sphere", "a"), "a");
    double b = doc.contains("b") ? as_number(doc["b"], "b") : 0.0;
    Rect dom = doc.contains("domain") ? rect_from(doc["domain"])
                                      : sphere_default_domain(a, b);
    return sphere_cpd(a, b, dom);
  }
  if (kind == "gallery") {
    std::string name = as_string(require(doc, "gallery", "name"), "name");
    if (doc.contains("domain")) return gallery(name, rect_from(doc["domain"]));
    return gallery(name);
  }
  throw ValidationError(
      "spec: unknown kind \"" + kind +
      "\" (expected case1, case2, catenoid, sphere or gallery)");
}

ParamSurface surface_from_spec_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ValidationError("cannot read spec file: " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return surface_from_spec_text(buf.str());
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["surface"] = report.surface;
  j["coord_kind"] = report.coord_kind;
  j["grid"] = {{"nx", report.grid.nx},
               {"ny", report.grid.ny},
               {"margins", report.grid.margins}};
  j["total_points"] = report.total_points;
  j["masked_points"] = report.masked_points;
  j["mask_radius"] = report.mask_radius;
  if (!report.degenerate.empty()) j["degenerate"] = report.degenerate;
  j["warnings"] = report.warnings;
  j["all_pass"] = report.all_pass();
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) checks.push_back(check_to_json(c));
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string classification_to_json(const Classification& c,
                                   const std::string& surface_name) {
  ordered_json j;
  j["surface"] = surface_name;
  j["minimal"] = c.minimal;
  j["flat"] = c.flat;
  j["cpd"] = c.cpd;
  j["constant_angle"] = c.constant_angle;
  j["umbilic"] = c.umbilic;
  if (c.cmc)
    j["cmc"] = *c.cmc;
  else
    j["cmc"] = nullptr;
  j["measurements"] = {{"adapted_chart", c.adapted_chart},
                       {"max_abs_H", c.max_abs_H},
                       {"max_abs_K", c.max_abs_K},
                       {"kappa_gap", c.kappa_gap},
                       {"theta_spread", c.theta_spread},
                       {"max_theta_y", c.max_theta_y},
                       {"max_alignment", c.max_alignment}};
  return j.dump(2) + "\n";
}

}  // namespace cpdsurf
