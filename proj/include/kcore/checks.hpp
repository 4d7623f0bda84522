#pragma once

#include <string>
#include <vector>

namespace kcore {

// Outcome of one named consistency suite.
struct CheckResult {
  std::string suite;
  long long checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Runs every consistency suite for each bound 1..k over partitions of degree
// at most n. Each suite recomputes results of the fast implementations by an
// independent route (brute-force search, transitive closure, alternative
// formulas) and records a description of every disagreement. Sizes of the
// costlier cross-checks are capped internally, so large n stays feasible.
std::vector<CheckResult> run_all_checks(int n, int k);

}  // namespace kcore
