#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssig {

/// Command line entry point, factored out of main() so runs can be driven
/// in-process. `args` excludes the program name. Exit codes: 0 clean run
/// without failing verdicts, 1 usage or input error, 2 clean run with at
/// least one failing verdict (a counterexample was found).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssig
