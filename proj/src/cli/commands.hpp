#pragma once

#include <iosfwd>

namespace twisted::cli {

/// Runs the command line and returns the exit code: 0 when every verdict
/// passes, 1 when a mathematical verdict fails, 2 on an input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace twisted::cli
