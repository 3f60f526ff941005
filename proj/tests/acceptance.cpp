// Acceptance battery: runs every verification criterion at its pinned scale
// and prints one pass/fail line per criterion.

#include "nsclab/verify.hpp"

#include <cstdio>
#include <exception>
#include <string>

int main(int argc, char** argv) {
  nsclab::SuiteConfig cfg;
  cfg.seed = 1;
  cfg.jobs = 0;  // all cores
  if (argc > 1) cfg.seed = std::strtoull(argv[1], nullptr, 10);

  // Wall-time budgets in milliseconds; 0 means unbounded.
  const double budgets[11] = {0,     10000, 60000, 5000, 120000, 0,
                              0,     120000, 0,    0,    0};

  int failures = 0;
  for (int index = 1; index <= nsclab::criterion_count(); ++index) {
    nsclab::VerificationReport report;
    try {
      report = nsclab::run_criterion(index, cfg);
    } catch (const std::exception& e) {
      std::printf("[FAIL] criterion %2d: %s -- exception: %s\n", index,
                  nsclab::criterion_label(index).c_str(), e.what());
      ++failures;
      continue;
    }
    bool pass = report.pass();
    const double budget = budgets[index];
    if (budget > 0 && report.wall_ms > budget) {
      pass = false;
      std::printf("         over budget: %.0f ms > %.0f ms\n", report.wall_ms,
                  budget);
    }
    std::printf("[%s] criterion %2d: %s (%s, %.0f ms)\n",
                pass ? "PASS" : "FAIL", index,
                nsclab::criterion_label(index).c_str(), report.suite.c_str(),
                report.wall_ms);
    for (const auto& prop : report.properties) {
      if (!pass) {
        std::printf("         %s %s (margin %.3g)%s%s\n",
                    prop.pass ? "ok  " : "FAIL", prop.name.c_str(), prop.margin,
                    prop.detail.empty() ? "" : " -- ",
                    prop.detail.c_str());
      }
    }
    if (!pass) ++failures;
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
