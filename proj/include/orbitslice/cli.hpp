#pragma once

#include <iosfwd>

namespace orbitslice {

/// Runs the command line tool. Returns 0 on success, 1 on a computation
/// error and 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbitslice
