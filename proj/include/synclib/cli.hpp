#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace synclib {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes: 0 success, 1 usage error, 2 parse error,
// 3 not synchronizing, 4 resource budget exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNotSynchronizing = 3;
inline constexpr int kExitResource = 4;

// Dispatches one invocation. args excludes the program name. Reports go
// to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace synclib
