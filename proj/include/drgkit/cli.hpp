#pragma once

#include <iosfwd>

namespace drgkit {

// Runs one CLI invocation.  Reports go to out, diagnostics to err.
// Exit status: 0 success, 1 analysis failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace drgkit
