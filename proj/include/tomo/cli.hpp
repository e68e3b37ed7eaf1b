#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tomo {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;          // bad parameters or parse error
inline constexpr int kExitBoundViolation = 3;
inline constexpr int kExitNotUnique = 4;
inline constexpr int kExitSizeMismatch = 5;
inline constexpr int kExitGuard = 6;

/// Full command dispatch; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tomo
