#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace fluct {

/// Outcome of one property over all the cases a suite enumerated.
struct CheckResult {
  std::string name;
  long cases = 0;
  bool passed = true;
  /// The first failing case in enumeration order; null when passed.
  nlohmann::json counterexample;
};

struct SuiteReport {
  std::string suite;
  int max = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// {"suite", "max", "passed", "checks": [{"name", "cases", "passed",
  /// "counterexample"?}]}. Contains no timings, so reruns are identical.
  nlohmann::json to_json() const;
};

/// main-theorem, ks, semicircular, semicircular-square, haar, mobius, order,
/// lemmas.
const std::vector<std::string>& suite_names();

/// The size each suite runs at when no bound is given. For
/// semicircular-square it bounds p and q separately; elsewhere p + q or n.
int default_max(const std::string& suite);

/// Runs a suite with `jobs` worker threads. Work is split into cells (one
/// per shape or size) and results are merged in cell order, so the report
/// does not depend on `jobs`. max <= 0 selects default_max. Throws
/// std::invalid_argument on an unknown suite.
SuiteReport run_suite(const std::string& suite, int max = 0, int jobs = 1);

}  // namespace fluct
