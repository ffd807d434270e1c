#pragma once

#include <string>

#include "cpdsurf/surface.hpp"
#include "cpdsurf/verify.hpp"

namespace cpdsurf {

// Builds a surface from a JSON spec document:
//   {"kind": "case1" | "case2" | "catenoid" | "sphere" | "gallery", ...}
// Field requirements per kind are documented in the README. Invalid JSON,
// missing fields, or bad values raise ValidationError.
ParamSurface surface_from_spec_text(const std::string& text);
ParamSurface surface_from_spec_file(const std::string& path);

// Deterministic JSON serializations (stable key order, stable number text).
std::string report_to_json(const VerificationReport& report);
std::string classification_to_json(const Classification& c,
                                   const std::string& surface_name);

}  // namespace cpdsurf
