// Command-line front end.  run_cli takes the argument list (without the
// program name) and writes to the given streams, so tests can drive it
// in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wdim {

// Exit code 0 on success, 1 when a verification check finds a mathematical
// counterexample, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wdim
