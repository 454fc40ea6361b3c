// Command-line front end, separated from main() so the whole surface is
// testable in-process: argument parsing, command dispatch, JSON/CSV/text
// serialization, and the stable exit-code contract
// (0 success, 1 verification failure / internal identity failure,
// 2 usage or domain error).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairpoly {

// Runs one CLI invocation.  `args` excludes the program name.  All regular
// output goes to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pairpoly
