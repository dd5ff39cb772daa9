#pragma once

namespace archval {

// Command-line entry point. Exit codes: 0 success, 1 load/validation or
// runtime failure, 2 usage error.
int run_cli(int argc, const char* const* argv);

} // namespace archval
