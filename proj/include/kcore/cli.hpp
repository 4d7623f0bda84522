#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcore {

// Runs one subcommand with the given arguments (program name excluded).
// Returns the process exit code: 0 on success, 2 for a validation problem
// (diagnosed with one line on err), 64 for a missing or unknown subcommand.
// in supplies the JSON input of the subcommands that read a tableau.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace kcore
