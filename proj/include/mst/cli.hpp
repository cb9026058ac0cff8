#pragma once

// Command-line front end. Every subcommand builds a report that is written as
// one JSON object (or CSV rows for grid-valued results).
//
// Exit codes: 0 success, 2 input error, 3 non-convergence.

#include <iosfwd>
#include <string>
#include <vector>

namespace mst::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNonConvergence = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mst::cli
