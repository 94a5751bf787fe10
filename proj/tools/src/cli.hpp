#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace b1f::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // invalid input factorisation, mismatch, refused parameters
inline constexpr int kUsage = 2;    // bad flags or unreadable document
inline constexpr int kNotFound = 3;
inline constexpr int kUnknown = 4;  // node budget exhausted

// args excludes the program name. Reads B1F_NODE_BUDGET as the default for
// --budget.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace b1f::cli
