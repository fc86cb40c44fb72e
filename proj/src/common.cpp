#include "aldente/common.hpp"

namespace aldente {

namespace {

// Nanoseconds since the steady clock epoch; 0 means unarmed.
std::atomic<std::int64_t> g_deadline_ns{0};

}  // namespace

void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline) {
    if (!deadline) {
        g_deadline_ns.store(0, std::memory_order_relaxed);
        return;
    }
    auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(deadline->time_since_epoch()).count();
    if (ns == 0) ns = 1;
    g_deadline_ns.store(ns, std::memory_order_relaxed);
}

bool deadline_armed() {
    return g_deadline_ns.load(std::memory_order_relaxed) != 0;
}

void check_deadline() {
    const std::int64_t ns = g_deadline_ns.load(std::memory_order_relaxed);
    if (ns == 0) return;
    const auto now = std::chrono::steady_clock::now().time_since_epoch();
    if (std::chrono::duration_cast<std::chrono::nanoseconds>(now).count() >= ns) {
        throw TimeoutExceeded();
    }
}

}  // namespace aldente
