#pragma once
// Suite execution and the two report renderings. The JSON rendering is
// byte-stable for fixed (seed, trials, version) except for the trailing
// wall_ms field.

#include <string>
#include <vector>

#include "checks.hpp"

namespace octa::cli {

struct Report {
  std::string suite;
  std::uint64_t seed = 42;
  long long trials = 1000;
  std::vector<CheckResult> checks;
  bool overall_pass = true;  // informational checks excluded
  double wall_ms = 0.0;
};

Report run_suite(const CheckContext& ctx);

std::string report_text(const Report& r);
std::string report_json(const Report& r);

}  // namespace octa::cli
