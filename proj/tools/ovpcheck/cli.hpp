#pragma once

#include <iosfwd>

namespace ovpcheck {

enum ExitCode : int { exit_pass = 0, exit_mismatch = 1, exit_usage = 2 };

/// Entry point shared by main() and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ovpcheck
