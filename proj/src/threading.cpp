#include "sscag/threading.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sscag {

namespace {
int g_threads = -1;  // -1: not configured yet
}

void set_thread_count(int threads) {
    g_threads = threads;
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
}

int thread_count() {
    if (g_threads == -1) {
        int resolved = 0;
        if (const char* env = std::getenv("SSCAG_THREADS")) {
            resolved = std::atoi(env);
            if (resolved < 0) resolved = 0;
        }
        set_thread_count(resolved);
        g_threads = resolved;
    }
#ifdef _OPENMP
    if (g_threads > 0) return g_threads;
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace sscag
