#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace primelab::cli {

// Fixed exit codes: 0 success, 2 precondition violation, 64 unknown
// subcommand, 74 unwritable output.
constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitUsage = 64;
constexpr int kExitCantCreate = 74;

// Parses and dispatches one invocation. args excludes the program name.
// Tables go to `out` (or a --output file), diagnostics to `err`. The same
// args always produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primelab::cli
