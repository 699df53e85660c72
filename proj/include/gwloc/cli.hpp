#ifndef GWLOC_CLI_HPP
#define GWLOC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gwloc::cli {

// Runs the command line given argv-style arguments (without the program
// name).  Output goes to `out` unless an --output path is given.  Returns
// the process exit code: 0 success, 1 identity failure, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gwloc::cli

#endif
