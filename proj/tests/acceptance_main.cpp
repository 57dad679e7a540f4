// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cstdio>

#include "verify.hpp"

int main() {
  std::vector<fliptop::CriterionResult> results = fliptop::run_acceptance();
  int failures = 0;
  for (const auto& r : results) {
    std::printf("criterion %2d %s: %s (%s) [%.2fs]\n", r.id,
                r.pass ? "PASS" : "FAIL", r.title.c_str(), r.detail.c_str(),
                r.seconds);
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failures);
  return failures == 0 ? 0 : 1;
}
