#pragma once

#include <string>
#include <vector>

namespace fliptop {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample on failure, summary on success
};

// suite is one of: oracle, lemmas, projection, moments, all.
// n_max <= 0 selects each suite's default range.
std::vector<CheckResult> verify_suite(const std::string& suite, int n_max);

std::string render_report(const std::vector<CheckResult>& results);
int count_failures(const std::vector<CheckResult>& results);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// The ten acceptance checks, each with its stated tolerance and time limit.
std::vector<CriterionResult> run_acceptance();

}  // namespace fliptop
