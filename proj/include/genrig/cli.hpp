#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genrig {

inline constexpr int kExitRigid = 0;  // also plain success
inline constexpr int kExitUsage = 1;
inline constexpr int kExitLimit = 2;    // search budget or expression cap
inline constexpr int kExitFailure = 3;  // any other error, or a failed stress check
inline constexpr int kExitFlexible = 10;

// Subcommands: check, oracle, straighten, balanced, stress, certificate, reduce.
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genrig
