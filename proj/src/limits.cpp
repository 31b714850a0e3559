#include "ffh/limits.hpp"

#include <atomic>
#include <mutex>

namespace ffh {

namespace {
std::mutex g_limits_mutex;
Limits g_limits;
std::atomic<Fault> g_fault{Fault::None};
}  // namespace

const Limits& limits() { return g_limits; }

void set_limits(const Limits& l) {
  std::lock_guard lock(g_limits_mutex);
  g_limits = l;
}

Fault injected_fault() { return g_fault.load(std::memory_order_relaxed); }
void inject_fault(Fault f) { g_fault.store(f, std::memory_order_relaxed); }

}  // namespace ffh
