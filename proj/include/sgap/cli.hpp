#pragma once

namespace sgap {

// Entry point for the command-line tool. Exit codes: 0 on success, 1 when a
// computation or verification check fails, 2 on usage, parse, or
// degenerate-input errors.
int run_cli(int argc, char** argv);

}  // namespace sgap
