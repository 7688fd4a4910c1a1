#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rns {

// Full command-line driver, factored out of main() so tests can run it
// in-process. Returns the process exit code:
//   0 success, 2 usage or parse error, 3 range/budget violation, 4 I/O error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rns
