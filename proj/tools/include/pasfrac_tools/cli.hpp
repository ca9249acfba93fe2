#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pasfrac::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `pasfrac` command. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pasfrac::tools
