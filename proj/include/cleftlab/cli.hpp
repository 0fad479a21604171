#pragma once

#include <string>
#include <vector>

namespace cleftlab {

/// Runs the command line given the arguments after the program name.
/// Exit codes: 0 computed/pass, 1 inconclusive (budget), 2 schema error or
/// missing input, 3 invariant violation, 4 counterexample found.
int cli_run(const std::vector<std::string>& args);

}  // namespace cleftlab
