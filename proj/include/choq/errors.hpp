#pragma once

#include <stdexcept>
#include <string>

namespace choq {

// All library failures derive from Error and carry a stable machine-readable
// code, surfaced verbatim by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct OutOfWindow : Error {
  OutOfWindow(const std::string& field, const std::string& bound)
      : Error("OutOfWindow", "parameter '" + field + "' violates " + bound), field(field), bound(bound) {}
  std::string field, bound;
};

struct NonfiniteInput : Error {
  explicit NonfiniteInput(const std::string& field) : Error("NonfiniteInput", "non-finite value for '" + field + "'") {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

struct NonfiniteField : Error {
  NonfiniteField() : Error("NonfiniteField", "field contains non-finite samples") {}
};

struct AlphaOutOfRange : Error {
  AlphaOutOfRange() : Error("AlphaOutOfRange", "riesz order alpha must lie in (0, N)") {}
};

struct NonpositiveDilation : Error {
  NonpositiveDilation() : Error("NonpositiveDilation", "dilation parameter t must be > 0") {}
};

struct NonpositiveT : Error {
  NonpositiveT() : Error("NonpositiveT", "fibering parameter t must be > 0") {}
};

struct NonpositiveTheta : Error {
  NonpositiveTheta() : Error("NonpositiveTheta", "scaling parameter theta must be > 0") {}
};

struct ZeroMass : Error {
  ZeroMass() : Error("ZeroMass", "field has zero mass") {}
};

struct DegenerateProfile : Error {
  DegenerateProfile() : Error("DegenerateProfile", "fibering profile needs A > 0") {}
};

struct RegimeMismatch : Error {
  explicit RegimeMismatch(const std::string& what) : Error("RegimeMismatch", what) {}
};

struct NoSuchRoot : Error {
  explicit NoSuchRoot(const std::string& kind) : Error("NoSuchRoot", "fibering map has no " + kind + " root"), kind(kind) {}
  std::string kind;
};

struct NotApplicable : Error {
  explicit NotApplicable(const std::string& what) : Error("NotApplicable", what) {}
};

struct MissingAuxiliaryLevel : Error {
  explicit MissingAuxiliaryLevel(const std::string& what) : Error("MissingAuxiliaryLevel", what) {}
};

struct MissingConstants : Error {
  explicit MissingConstants(const std::string& what) : Error("MissingConstants", what) {}
};

struct NoConvergence : Error {
  NoConvergence(const std::string& what, long iterations, double last_residual)
      : Error("NoConvergence", what), iterations(iterations), last_residual(last_residual) {}
  long iterations;
  double last_residual;
};

struct NonpositiveProfile : Error {
  NonpositiveProfile() : Error("NonpositiveProfile", "iteration left the positive cone") {}
};

struct NotBoundedBelow : Error {
  NotBoundedBelow() : Error("NotBoundedBelow", "regime predicts energy unbounded below on S(c); global minimization refused") {}
};

struct Diverging : Error {
  Diverging() : Error("Diverging", "gradient energy blew up; unbounded regime misuse") {}
};

struct RegionExit : Error {
  RegionExit() : Error("RegionExit", "no interior minimizer; trajectories exit the region") {}
};

struct ConstraintExit : Error {
  ConstraintExit() : Error("ConstraintExit", "iterate left the constraint set") {}
};

struct NoRoot : Error {
  NoRoot() : Error("NoRoot", "initial datum has no t-root for the requested projection") {}
};

struct ValidationFailure : Error {
  explicit ValidationFailure(const std::string& which)
      : Error("ValidationFailure", "solution validation failed gate: " + which), which(which) {}
  std::string which;
};

struct ConfigParse : Error {
  explicit ConfigParse(const std::string& what) : Error("ConfigParse", what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error("IoError", what) {}
};

}  // namespace choq
