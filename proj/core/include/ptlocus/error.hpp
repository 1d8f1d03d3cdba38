#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptlocus {

enum class ErrorKind {
  Overflow,
  NonConvergence,
  SectorViolation,
  ContourThroughRoot,
  MaxCountExceeded,
  Unstable,
  BracketingFailure,
  SeedDivergence,
  BranchLost,
  NotABranch,
  DriftUnrecoverable,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Raised when a computation cannot deliver a result that meets its contract.
/// Precondition violations are reported with std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ptlocus
