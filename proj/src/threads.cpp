#include "kdense/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kdense {

void apply_thread_env() {
  const char* env = std::getenv("KDENSE_THREADS");
  if (!env) return;
  try {
    int n = std::stoi(env);
    if (n >= 1) set_worker_count(n);
  } catch (...) {
    // ignore malformed values
  }
}

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_worker_count(int n) {
#ifdef _OPENMP
  if (n >= 1) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace kdense
