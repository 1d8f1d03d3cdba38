#include "ptlocus/error.hpp"

namespace ptlocus {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::SectorViolation: return "SectorViolation";
    case ErrorKind::ContourThroughRoot: return "ContourThroughRoot";
    case ErrorKind::MaxCountExceeded: return "MaxCountExceeded";
    case ErrorKind::Unstable: return "Unstable";
    case ErrorKind::BracketingFailure: return "BracketingFailure";
    case ErrorKind::SeedDivergence: return "SeedDivergence";
    case ErrorKind::BranchLost: return "BranchLost";
    case ErrorKind::NotABranch: return "NotABranch";
    case ErrorKind::DriftUnrecoverable: return "DriftUnrecoverable";
  }
  return "Unknown";
}

NumericalError::NumericalError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace ptlocus
