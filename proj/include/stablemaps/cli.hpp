#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stablemaps::cli {

/// Run the command-line interface on the given arguments (program name not
/// included).  Returns the process exit code: 0 on success, 1 when a checked
/// law fails / a target is unreachable / a genus list is infeasible, 2 on
/// malformed input or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace stablemaps::cli
