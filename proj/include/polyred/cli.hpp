#pragma once

#include "polyred/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace polyred {

/// Process exit codes.
enum ExitCode : int {
    ExitVerified = 0,
    ExitFailed = 1,
    ExitUsage = 2,
    ExitResource = 3,
};

/// Runs one command line (without the program name). Documents go to `out`
/// or to the --output file; diagnostics and summaries go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Builtin graph by name: K<k>, P<k>, C<k>, E<k> (complete, path, cycle,
/// edgeless). Otherwise reads an instance file and takes its graph.
Graph load_graph(const std::string& spec);

} // namespace polyred
