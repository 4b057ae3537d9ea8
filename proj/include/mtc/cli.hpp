#pragma once

// Command-line front end: seq, verify, suite, list.
//
// Exit codes: 0 no counterexample, 1 at least one counterexample, 2 usage
// error (unknown flag, sequence, claim or suite; malformed range), 3 internal
// error such as an unwritable output file mid-run.

#include <ostream>

namespace mtc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mtc
