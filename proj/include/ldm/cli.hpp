#pragma once

#include <ostream>

namespace ldm {

/// Runs one command-line invocation. JSON reports go to `out`, diagnostics to
/// `err`. Returns 0 on success, 1 when a check fails, 2 on usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ldm
