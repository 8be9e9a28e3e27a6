#pragma once

#include <cstdint>
#include <random>

namespace escrowsim {

// splitmix64 step (Vigna, 2015). Used only for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic per-stream seed so replications are independent yet reproducible.
inline std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t stream) {
    std::uint64_t state = base_seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    return splitmix64(state);
}

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
// Avoids std::uniform_real_distribution so the stream is identical everywhere.
template <class URBG>
double uniform01(URBG& rng) {
    return static_cast<double>(static_cast<std::uint64_t>(rng()) >> 11) * 0x1.0p-53;
}

}  // namespace escrowsim
