#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cpdsurf {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error from the expression parser. `offset` is the byte offset into
// the input where parsing failed; `expected` lists what would have been legal.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& detail);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Evaluation outside a function's domain (ln of a nonpositive value, etc).
class DomainError : public Error {
 public:
  DomainError(const std::string& what_failed, double argument);
  double argument() const { return argument_; }

 private:
  double argument_;
};

// Spec-level validation failure (bad field, expression using wrong variable,
// degenerate immersion, invalid domain...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Adaptive quadrature failed to reach the tolerance; carries the last estimate.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& msg, double estimate)
      : Error(msg), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

// ODE integration aborted (step underflow near a singularity).
class OdeError : public Error {
 public:
  OdeError(const std::string& msg, double location)
      : Error(msg), location_(location) {}
  double location() const { return location_; }

 private:
  double location_;
};

}  // namespace cpdsurf
