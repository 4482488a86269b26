#pragma once

#include <ostream>

namespace ncpark {

/// Runs the ncpark command line. Exit codes: 0 pass, 1 verification
/// failure, 2 usage or cap error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncpark
