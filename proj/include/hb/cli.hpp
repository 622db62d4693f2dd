#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hb::cli {

enum ExitCode : int { kOk = 0, kFalsified = 1, kInputError = 2, kBudgetExceeded = 3 };

/// Runs one subcommand. `args` excludes the program name. JSON goes to `out`,
/// diagnostics to `err`; inputs not given by a file flag are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hb::cli
