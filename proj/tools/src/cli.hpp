#pragma once

#include <iosfwd>

namespace vecbeam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< I/O and unexpected errors
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPrecondition = 3;

/// `vecbeam <command> [--config PATH] [--out DIR] [--extended] [key=value ...]`
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vecbeam::cli
