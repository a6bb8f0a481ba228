#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicx {

enum class ErrorKind {
  ZeroDivisorDivision,
  ZeroDivisorLog,
  ZeroDivisorPower,
  GammaPole,
  MaxTermsExceeded,
  QuadratureNonConvergence,
  PathTruncationError,
  SeriesDivergence,
  PreconditionViolation,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every library failure is reported through this type; kind() carries the
// machine-readable category, what() reads "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace bicx
