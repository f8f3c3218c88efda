#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chessprobe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Parses `args` (without the program name) and runs one subcommand. Data goes
/// to `out` (or the --out file), diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Perft and task-table fixtures; prints one line per check.
bool selfcheck(std::ostream& out);

}  // namespace chessprobe::cli
