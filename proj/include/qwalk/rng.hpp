#pragma once

#include <cstdint>
#include <random>

namespace qwalk {

// splitmix64; spreads nearby seeds across the engine's state space.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Deterministic per-seed stream; trial i of a batch uses rng_stream(seed + i),
// so batched runs reproduce the corresponding single-seed calls exactly.
inline std::mt19937_64 rng_stream(std::uint64_t seed) {
    return std::mt19937_64(mix64(seed));
}

}  // namespace qwalk
