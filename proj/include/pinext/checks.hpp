#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pinext::checks {

struct CheckInfo {
  int id;
  std::string name;
  std::string description;
  double budget_seconds;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  /// Flips one value of the restricted cocycle in the Q8 check, which must
  /// then fail.
  bool inject_fault = false;
};

struct CheckResult {
  CheckInfo info;
  /// All assertions held and the run stayed within budget.
  bool passed = false;
  bool within_budget = false;
  long long assertions = 0;
  /// First failed assertion, or a short summary.
  std::string detail;
  double seconds = 0;
};

/// The eight end-to-end checks, in order.
const std::vector<CheckInfo>& check_list();
CheckResult run_check(int id, const CheckOptions& options);
std::vector<CheckResult> run_all(const CheckOptions& options);

}  // namespace pinext::checks
