#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace figeight {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Runs one command line (args excludes the program name) and returns the
/// exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace figeight
