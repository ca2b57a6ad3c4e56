#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgcli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

// One mgtool invocation; args exclude the program name. Output is a pure
// function of the arguments and the input text.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mgcli
