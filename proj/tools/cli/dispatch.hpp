#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace satlab::cli {

// Runs one command line (without the program name). Text or, with --json, one
// object {"status","payload","verification"} per line goes to `out`;
// diagnostics go to `err`. Returns 0 on success, 1 on a domain error and 2 on
// a usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satlab::cli
