#pragma once

// Command-line driver. Exit codes: 0 success, 1 domain failure (invalid
// algebra, law failure, failed isomorphism), 2 usage or parse error.

#include <ostream>
#include <string>
#include <vector>

namespace eat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eat
