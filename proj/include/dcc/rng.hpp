#pragma once

#include <cstdint>

namespace dcc {

// splitmix64, the one PRNG used anywhere in this project. Every random
// choice is a pure function of a recorded 64-bit seed, so runs replay
// exactly.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() { return splitmix64_next(state); }
    bool next_bit() { return next() >> 63; }
    // uniform in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

// Per-draw child seed for sampled runs: draw i of a run seeded s uses
// stream seed mix(s, i). Documented in the README; changing this breaks
// replay of recorded (seed, draw) pairs.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t draw) {
    std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ull * (draw + 1));
    return splitmix64_next(s);
}

}  // namespace dcc
