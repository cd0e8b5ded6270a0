#pragma once

namespace sscag {

// Worker count for the matrix kernels. 0 = all cores. The SSCAG_THREADS
// environment variable is consulted when nothing was set explicitly.
void set_thread_count(int threads);
int thread_count();

}  // namespace sscag
