#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fences::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // validation error, cap breach or failed check
inline constexpr int kUsage = 2;    // malformed arguments

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fences::cli
