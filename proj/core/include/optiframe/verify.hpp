#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace optiframe::verify {

struct CheckResult {
  std::string suite;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Suite names in their canonical run order; "floor" comes last because it
/// audits every condition number the earlier suites produced.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all"). Throws InvalidArgument for an unknown name.
std::vector<CheckResult> run_suite(std::string_view name);

/// Every finite condition number computed by a suite in this process.
std::vector<double> recorded_betas();

}  // namespace optiframe::verify
