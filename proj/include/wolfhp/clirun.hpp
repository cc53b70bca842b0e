#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wolfhp {

/// Runs the command line (argv without the program name) against the given
/// streams. Returns the process exit code: 0 all checks passed, 1 some check
/// failed, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wolfhp
