#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropjac {

enum class ErrorCode {
  ZeroVector,
  SyntaxError,
  DuplicateExponent,
  DegeneratePolygon,
  NotOnCurve,
  DisconnectedCurve,
  NonSimpleCycle,
  NotTransversal,
  VertexOnBoundary,
  ExhaustedShiftSequence,
  CarrierMismatch,
  NotReduced,
  SingularPeriodMatrix,
  HypothesisViolated,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported as an Error carrying a code, so
// callers (notably the CLI) can map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropjac
