#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace newtonspec::cli {

/// Runs the command line `args` (program name first). Returns the exit code:
/// 0 on success, 1 on bad input, 2 when an internal cross-check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace newtonspec::cli
