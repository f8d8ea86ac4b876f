#pragma once

#include <iosfwd>

namespace orecalc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;

/// Entry point of the `orecalc` tool with explicit streams; `--points -`
/// reads from `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace orecalc
