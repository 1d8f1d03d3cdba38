#pragma once

#include <string>
#include <vector>

#include "ptlocus/locus.hpp"

namespace ptlocus::verify {

enum class Level { Fast, Full };

struct VerifyOptions {
  Level level = Level::Full;
  double knot = kKnot;  // overridable for fault injection
  int jobs = 1;
};

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  double tolerance = 0.0;
  bool pass = false;
  std::string provenance;
  double runtime_ms = 0.0;
  double budget_ms = 0.0;
};

struct Report {
  std::vector<Check> checks;
  bool overall = false;
};

/// Names of the acceptance checks in report order.
std::vector<std::string> acceptance_check_names();

/// Runs one named check. Numerical failures inside a check are reported as a
/// failed check rather than thrown.
Check run_check(const std::string& name, const VerifyOptions& options);

/// Runs every check, up to options.jobs at a time; the report order is fixed.
Report run_acceptance(const VerifyOptions& options);

}  // namespace ptlocus::verify
