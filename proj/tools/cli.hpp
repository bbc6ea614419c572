#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace syz::cli {

/// Runs the command line (args excludes the program name) against the given
/// streams and returns the process exit code:
/// 0 success/pass, 1 verification fail, 2 usage/parse error,
/// 3 hypothesis violation, 4 resource cap exceeded.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace syz::cli
