#pragma once

#include <cstddef>

namespace vecbeam {

/// Caps the worker count used by pixel loops. 0 restores the default.
void set_thread_limit(int threads);
/// Reads VECBEAM_THREADS if set. Throws ConfigError unless it is a positive
/// integer.
void apply_thread_limit_from_env();
int thread_limit();

}  // namespace vecbeam
