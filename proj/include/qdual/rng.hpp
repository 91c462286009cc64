#pragma once

#include <cstdint>
#include <random>

namespace qdual {

// splitmix64 finalizer; also the hash behind per-run stream derivation.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Stream split rule for parallel runs: hash of (base seed XOR run index).
inline std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::uint64_t run_index) {
    return mix64(base_seed ^ run_index);
}

// Seeded generator with a stable cross-platform stream. The engine is
// std::mt19937_64 (raw output is pinned by the standard); the draws below are
// hand-rolled because the standard library distributions are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform double in [0, 1) with 53-bit resolution
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound), bound >= 1, rejection-sampled (no modulo bias)
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        std::uint64_t v = next_u64();
        while (v < threshold) v = next_u64();
        return v % bound;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qdual
