#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpa::cli {

/// Exit codes: 0 success or decided, 1 usage or input error, 2 undecided
/// properness (cyclic graph over a field that is not positive definite).
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kUnknown = 2;

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpa::cli
