#pragma once

// quadzeta command line: secant, cotangent, verify and table subcommands.
//
// Exit codes: 0 success, 1 unexpected failure, 2 parse or domain error,
// 3 method disagreement or failed verification, 4 resource cap exceeded,
// 5 resonance in the numeric series.

#include <iosfwd>
#include <string>
#include <vector>

namespace quadzeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitDisagree = 3;
inline constexpr int kExitResource = 4;
inline constexpr int kExitResonance = 5;

/// Runs the CLI on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadzeta::cli
