#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spincomb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;

/// Entry point shared by the spincomb binary and the tests. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spincomb::cli
