#pragma once

#include <cstdint>

namespace tabmark {

// 64-bit state permutation generator (splitmix-style). Attack and dataset
// code depend on its exact draw sequence: the same seed must reproduce the
// same table on every platform, so the update and mix below are frozen.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound must be nonzero.
    uint64_t next_below(uint64_t bound) { return next() % bound; }

    // Uniform in [lo, hi], inclusive.
    int64_t next_in(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(next_below(static_cast<uint64_t>(hi - lo) + 1));
    }

    int next_bit() { return static_cast<int>(next() & 1); }

  private:
    uint64_t state_;
};

// Finalizer of the same permutation, for deriving per-trial sub-seeds from
// one master seed. Trials seeded via derive_seed are order-independent.
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b) {
    uint64_t s = mix64(master + 0x9E3779B97F4A7C15ULL * (a + 1));
    return mix64(s + 0x9E3779B97F4A7C15ULL * (b + 1));
}

}  // namespace tabmark
