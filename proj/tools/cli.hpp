#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace facstat::cli {

/// Exit codes of the facstat tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a checked identity failed
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "p", "p^n" or a prime power such as "9" into (p, n).
std::pair<int, int> parse_field_order(const std::string& text);

}  // namespace facstat::cli
