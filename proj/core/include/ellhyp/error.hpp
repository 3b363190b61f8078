#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellhyp {

enum class ErrorKind {
  NonzeroRequired,
  NomeOutOfRange,
  DegenerateParameters,
  BalanceViolation,
  IndexOutOfTriangle,
  SingularToWorkingPrecision,
  SamplingExhausted,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonzeroRequired: return "NonzeroRequired";
    case ErrorKind::NomeOutOfRange: return "NomeOutOfRange";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::BalanceViolation: return "BalanceViolation";
    case ErrorKind::IndexOutOfTriangle: return "IndexOutOfTriangle";
    case ErrorKind::SingularToWorkingPrecision: return "SingularToWorkingPrecision";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind so
/// that callers (the sampler in particular) can tell poles from bugs.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ellhyp
