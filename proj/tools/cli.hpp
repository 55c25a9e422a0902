#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgspec::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDeviation = 3;

// Runs one command. args excludes the program name. The report goes to out,
// diagnostics to err. The vertex cap is read from DGSPEC_MAX_VERTICES.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgspec::cli
