#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coex::cli {

// Exit codes of the coexsim tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Runs `coexsim <verb> [flags]`. args[0] is the program name. Normal output
// goes to `out`, diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coex::cli
