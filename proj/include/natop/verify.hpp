#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace natop {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;  // counterexample or summary
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool pass() const;
};

/// The named verification suites; "all" runs everything.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, uint64_t seed);

}  // namespace natop
