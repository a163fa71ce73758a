#include "tropjac/error.hpp"

namespace tropjac {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateExponent: return "DuplicateExponent";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::DisconnectedCurve: return "DisconnectedCurve";
    case ErrorCode::NonSimpleCycle: return "NonSimpleCycle";
    case ErrorCode::NotTransversal: return "NotTransversal";
    case ErrorCode::VertexOnBoundary: return "VertexOnBoundary";
    case ErrorCode::ExhaustedShiftSequence: return "ExhaustedShiftSequence";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::SingularPeriodMatrix: return "SingularPeriodMatrix";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace tropjac
