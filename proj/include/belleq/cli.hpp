#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace belleq::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNoViolation = 1;  // domain-level negative result
inline constexpr int kUserError = 2;    // bad input, malformed file
inline constexpr int kInternalError = 3;

// Entry point behind the binary; also callable from tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace belleq::cli
