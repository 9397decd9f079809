#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isotriv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the isotriv command line.  args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isotriv::cli
