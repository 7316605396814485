#include "roughlob/parallel.hpp"

#include <atomic>

namespace roughlob::par {

namespace {
std::atomic<int> g_threads{0};
}

int threads() { return g_threads.load(std::memory_order_relaxed); }

void set_threads(int n) { g_threads.store(n < 0 ? 0 : n, std::memory_order_relaxed); }

} // namespace roughlob::par
