// Runs the eight end-to-end checks and prints one line per check.

#include "pinext/checks.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
  pinext::checks::CheckOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (const auto& r : pinext::checks::run_all(options)) {
    std::printf("criterion %d: %s  %s (%.3fs of %.0fs) - %s\n", r.info.id, r.passed ? "PASS" : "FAIL",
                r.info.name.c_str(), r.seconds, r.info.budget_seconds, r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
