#pragma once

// The verification suite shared by `pasfrac verify` and the acceptance binary.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pasfrac::tools {

struct SuiteOptions {
  std::uint64_t recurrence_q_max = 10000;  // Q range for the digit recurrences
  std::uint64_t oracle_q_max = 3000;       // q range for the enumeration oracle
  std::uint64_t stolarsky_u_max = 1000000;
  std::vector<std::uint32_t> primes = {2, 3, 5, 7};
  std::optional<std::filesystem::path> golden_dir;  // golden PBMs; skipped when absent
  std::uint64_t stieltjes_seed = 20240229;
  bool parallel = true;
  // Key of a check whose expected value is deliberately corrupted.
  std::string inject_fault;
};

struct CheckResult {
  int id = 0;
  std::string key;
  std::string title;
  std::string ref;  // identity or property the check exercises
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double time_limit = 0;  // 0 when unbounded
};

struct CheckSpec {
  int id;
  std::string key;
  std::string title;
  std::string ref;
  double time_limit;
  unsigned precision_bits;  // 0: the ambient working precision
};

[[nodiscard]] const std::vector<CheckSpec>& suite_checks();

/// Runs every check. Checks that need their own precision run after the
/// others, on the calling thread. `on_result` is called under a lock.
std::vector<CheckResult> run_suite(const SuiteOptions& options,
                                   const std::function<void(const CheckResult&)>& on_result = {});

[[nodiscard]] bool all_passed(const std::vector<CheckResult>& results);

}  // namespace pasfrac::tools
