// cli.hpp - the f2x command-line driver, callable in-process for tests.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace f2x {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a verification found a counterexample
inline constexpr int kExitUsage = 2;    // bad input, bad flags, resource bound

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f2x
