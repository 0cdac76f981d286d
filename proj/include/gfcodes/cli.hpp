#pragma once

#include <iosfwd>

namespace gfcodes::cli {

// Exit statuses shared by every subcommand.
enum ExitStatus : int {
    kOk = 0,           // verified / search complete
    kNegative = 1,     // verification failed, or a conjecture counterexample
    kInputError = 2,   // bad flags, unreadable or malformed files
    kUndecided = 3,    // capacity exceeded or cells left undecided
};

// Entry point for the gfcodes tool; primary output goes to `out`,
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gfcodes::cli
