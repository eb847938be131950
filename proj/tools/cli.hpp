#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace probgems::cli {

/// Runs one command line. Writes the output envelope to `out` and
/// diagnostics to `err`. Exit codes: 0 success, 1 domain or numeric error
/// (envelope carries the error), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace probgems::cli
