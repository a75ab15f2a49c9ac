#pragma once

namespace concentra {

/// Thread cap for all parallel kernels: CONCENTRA_THREADS if set (>= 1),
/// otherwise the OpenMP default. Cached after first call.
int max_threads();

/// Test hook: override the cap in-process (0 restores env/default behavior).
void set_thread_override(int n);

}  // namespace concentra
