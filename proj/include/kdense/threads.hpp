#pragma once

namespace kdense {

// Applies the KDENSE_THREADS environment variable (when set and valid)
// to the OpenMP runtime. No effect in serial builds.
void apply_thread_env();

int worker_count();
void set_worker_count(int n);

}  // namespace kdense
