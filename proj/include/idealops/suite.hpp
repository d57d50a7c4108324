// Verification-suite orchestration shared by the CLI and the acceptance
// tests: each suite emits structured check records into one report.
#pragma once

#include <string>
#include <vector>

#include "idealops/report.hpp"
#include "idealops/ideal.hpp"

namespace idealops {

struct SuiteConfig {
  Window window;
  std::vector<std::string> suites;  // subset of suite_names(), or "all"
  bool structured = false;          // structured text vs human-readable
  std::string out_path;             // empty: stdout
};

std::vector<std::string> suite_names();

Report run_oracle_suite(const Window& w);
Report run_axiom_suite(const Window& w);
Report run_enumeration_suite(const Window& w);
Report run_prime_scan_suite(const Window& w);
Report run_exceptional_suite(const Window& w);

// dispatches on cfg.suites; returns the merged report
Report run_suite(const SuiteConfig& cfg);

std::string config_string(const SuiteConfig& cfg);

}  // namespace idealops
