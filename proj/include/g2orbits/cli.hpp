#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace g2orbits {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 2,
    kExitInternal = 3,
};

/// Runs the command-line tool. args excludes the program name.
/// Subcommands: table, derivations, roots, classify, scan, check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g2orbits
