#pragma once

// The verification suites behind `check` and the acceptance runner: every
// criterion is a seeded, exact, self-contained check with its tolerances and
// sample counts pinned here.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adelekit {

struct SuiteOptions {
  std::uint64_t seed = 0;
  // Overrides the per-suite sample counts of the randomized criteria.
  std::optional<long long> samples;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  long long checks = 0;
  long long failures = 0;
  double seconds = 0.0;
  std::string detail;
};

std::vector<int> criterion_ids();  // 1..12
CriterionResult run_criterion(int id, const SuiteOptions& options);
std::vector<CriterionResult> run_all_criteria(const SuiteOptions& options);

std::string format_result_line(const CriterionResult& r);

}  // namespace adelekit
