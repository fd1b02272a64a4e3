#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace verlinde::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;  // verify found failures, or an internal error
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitUnknownCommand = 64;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace verlinde::cli
