#pragma once
// Command-line front end: enumeration, classification, verification,
// counting, and DOT export.

#include <iosfwd>
#include <string>
#include <vector>

namespace utn {

/// Runs the tool on the given arguments (argv[0] excluded).  Reads
/// classify input from in; writes results to out and diagnostics plus
/// counterexamples to err.  Exit codes: 0 success, 1 verification
/// failure, 2 usage error, 3 resource limit.
int run_cli(std::vector<std::string> args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace utn
