// Runs the acceptance criteria one by one and prints a PASS/FAIL line each.

#include <cstdio>
#include <iostream>

#include "pasfrac/numeric.hpp"
#include "pasfrac_tools/suite.hpp"

int main() {
  const pasfrac::PrecisionScope precision(pasfrac::kDefaultPrecisionBits);
  pasfrac::tools::SuiteOptions options;
  options.golden_dir = PASFRAC_GOLDEN_DIR;
  options.parallel = false;  // keep the per-criterion timings honest

  bool ok = true;
  pasfrac::tools::run_suite(options, [&](const pasfrac::tools::CheckResult& r) {
    const bool in_time = r.time_limit <= 0 || r.seconds < r.time_limit;
    const bool passed = r.passed && in_time;
    ok = ok && passed;
    char timing[64];
    if (r.time_limit > 0) {
      std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", r.seconds, r.time_limit);
    } else {
      std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
    }
    std::cout << (passed ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.key << "  [" << timing << "]  "
              << r.detail << std::endl;
  });
  std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return ok ? 0 : 1;
}
