#include "cdiag/parallel.hpp"

#include <atomic>

namespace cdiag {

namespace {
std::atomic<int> g_workers{1};
}

int worker_threads() { return g_workers.load(); }

void set_worker_threads(int t) { g_workers.store(t < 1 ? 1 : t); }

} // namespace cdiag
