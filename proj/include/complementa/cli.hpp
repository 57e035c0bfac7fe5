#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace complementa {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_usage = 2 };

/**
 * complementa <build|lattice|check|bounds|verify|export> [flags]
 *
 * `args` excludes the program name. Documents go to `out`, diagnostics to `err`.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace complementa
