#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mst {

enum class ErrorCode {
  InvalidSpec,
  PoleAtEndpoint,
  BranchMismatch,
  DomainError,
  SizeMismatch,
  SizeLimit,
  ZeroLambda,
  HypothesisViolation,
  IntegrabilityViolation,
  OracleFailure,
  SyntaxError,
  UnknownFunction,
  EvalError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library-wide exception. Non-convergence is not an error: it is reported
/// through the `converged` flag of the result types.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mst
