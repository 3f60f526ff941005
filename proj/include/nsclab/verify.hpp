#pragma once

#include "nsclab/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nsclab {

struct PropertyResult {
  std::string name;
  bool pass = false;
  double margin = 0.0;  // worst-case slack; negative means violated
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  int trials = 0;
  std::vector<PropertyResult> properties;
  int exact_evals = 0;
  int lower_bound_evals = 0;
  int infinite_evals = 0;
  double wall_ms = 0.0;

  bool pass() const;
};

struct SuiteConfig {
  int trials = 0;  // 0 selects the suite's pinned default
  std::uint64_t seed = 1;
  int jobs = 1;
};

/// Named verification suites exposed by the CLI: thm1, thm2, thm3,
/// counterexample, recovery, remark3.
std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg);

/// The full battery in fixed order; index is 1-based.
int criterion_count();
VerificationReport run_criterion(int index, const SuiteConfig& cfg);
std::string criterion_label(int index);

}  // namespace nsclab
