#include "bicx/error.hpp"

namespace bicx {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroDivisorDivision: return "ZeroDivisorDivision";
    case ErrorKind::ZeroDivisorLog: return "ZeroDivisorLog";
    case ErrorKind::ZeroDivisorPower: return "ZeroDivisorPower";
    case ErrorKind::GammaPole: return "GammaPole";
    case ErrorKind::MaxTermsExceeded: return "MaxTermsExceeded";
    case ErrorKind::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorKind::PathTruncationError: return "PathTruncationError";
    case ErrorKind::SeriesDivergence: return "SeriesDivergence";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace bicx
