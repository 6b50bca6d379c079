#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace citenorm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsageError = 2;

// Runs one invocation. `args` excludes the program name, e.g.
// {"evaluate", "--fixture", "appendix"}. Reports go to `out`, diagnostics
// and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace citenorm::cli
