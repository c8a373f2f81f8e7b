#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "besovcap/grid.hpp"
#include "besovcap/sets.hpp"

namespace besovcap {

struct CheckResult {
  std::string tag;
  long checks = 0;
  long violations = 0;
  double min_slack = 0.0;   ///< smallest normalized (rhs - lhs) observed
  std::string first_violation;
  bool ok() const { return violations == 0; }
};

struct VerifyOptions {
  int function_count = 200;
  int set_count = 200;
  std::uint64_t seed = 20240601;
  bool smooth_fine_members = true; ///< add 1e-3-spacing smooth members
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
  long total_violations() const {
    long v = 0;
    for (const auto& c : checks) v += c.violations;
    return v;
  }
};

/// Runs the inequality and identity suites of every module over a
/// deterministic random corpus of grid functions and discrete sets.
VerifyReport run_verification(const VerifyOptions& options);

/// Mixed corpus: box indicators, mollified indicators, hats, oscillating
/// examples, and random step functions across 1-3 dimensions.
std::vector<GridFunction> make_function_corpus(int count, std::uint64_t seed);

/// Unions of random boxes and balls, mostly 2-D.
std::vector<DiscreteSet> make_set_corpus(int count, std::uint64_t seed);

} // namespace besovcap
