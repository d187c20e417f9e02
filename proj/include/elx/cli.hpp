#pragma once

// Command-line front end. Exit codes: 0 affirmative, 1 negative, 2 unknown, 3 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace elx::cli {

inline constexpr int kAffirmative = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kUsageError = 3;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elx::cli
