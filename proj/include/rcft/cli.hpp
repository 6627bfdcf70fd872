#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcft {

/// Exit codes of the command line tool.
enum ExitCode : int { exit_pass = 0, exit_property_failure = 2, exit_usage = 3 };

/// Runs one command line (without the program name). Documents are read from
/// `in` unless --input names a file; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rcft
