#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latgeom::cli {

/// Runs the command line `args` (args[0] is the program name). Returns 0 on
/// success, 1 on a computation error or failed check, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latgeom::cli
