// cli.hpp — the `liegrade` command-line front door, callable in-process so
// the tests can drive it directly.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liegrade::cli {

// Exit codes: 0 success, 1 verification-suite failure, 2 malformed input,
// 3 arity or type mismatch.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace liegrade::cli
