#pragma once

// The kirbycalc command line, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace kirby {

/// Exit codes of every subcommand.
enum ExitCode : int { kVerified = 0, kRefuted = 1, kInputError = 2 };

/// `args` excludes the program name. A file argument of "-" reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kirby
