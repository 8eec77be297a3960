#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlnum {

// Command-line entry point. Results go to out, diagnostics to err.
// Returns 0 on success, 1 on a negative decision (non-membership, violated
// inequality, counterexamples found), 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nlnum
