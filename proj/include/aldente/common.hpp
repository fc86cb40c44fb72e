#pragma once

// Shared small utilities: hashing, seed mixing, and the cooperative
// deadline used by long-running solver loops.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace aldente {

using VertexId = std::uint32_t;

// SplitMix64 finalizer. Used both as a hash mixer and to derive
// per-sample RNG seeds from (master seed, stream, counter).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return splitmix64(splitmix64(seed ^ 0xa0761d6478bd642fULL) ^ splitmix64(stream) ^ (counter * 0xe7037ed1a0b428dbULL));
}

inline void hash_combine(std::size_t& h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

// Thrown when the process-wide deadline expires inside a solver loop.
struct TimeoutExceeded : std::runtime_error {
    TimeoutExceeded() : std::runtime_error("time limit exceeded") {}
};

// Process-wide cooperative deadline. The CLI arms it before a run;
// library loops poll it at coarse milestones. Unset by default, so
// direct library use never times out.
void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline);
bool deadline_armed();
void check_deadline();  // throws TimeoutExceeded once the deadline has passed

}  // namespace aldente
