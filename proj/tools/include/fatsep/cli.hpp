#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fatsep::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kBadInput = 2, kNodeCap = 3 };

/// Runs one command line (program name excluded). Records go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fatsep::cli
