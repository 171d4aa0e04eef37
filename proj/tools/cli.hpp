#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation; args excludes the program name. Results go to out (or
// the --output file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliff::cli
