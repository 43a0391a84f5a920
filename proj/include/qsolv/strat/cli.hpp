#pragma once

#include <iosfwd>

namespace qsolv::strat {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

/// Subcommands validate, center, admissible, strata, rep and verify.
/// Returns 0 when every check passes, 1 when one fails, 2 on invalid input.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsolv::strat
