#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFail = 2;
inline constexpr int kExitExhausted = 3;

/// Full command-line dispatch; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circlab::cli
