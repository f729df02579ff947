#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gridminor {

/// SplitMix64 generator. The output sequence is a pure function of the seed,
/// with no implementation-defined behavior, so fault samples and Monte Carlo
/// runs reproduce bit-for-bit on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). Rejection sampling; no modulo bias.
    uint64_t below(uint64_t n) {
        uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

private:
    uint64_t state_;
};

inline uint64_t mix64(uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

/// Folds a tuple of values into one seed; used to derive independent
/// per-trial streams from a master seed.
inline uint64_t mix_seed(std::initializer_list<uint64_t> parts) {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t p : parts) h = mix64(h ^ p) + 0x9e3779b97f4a7c15ULL;
    return mix64(h);
}

/// k distinct values from [1, population], sorted ascending.
/// Partial Fisher-Yates over the full index range.
inline std::vector<int> sample_distinct(SplitMix64& rng, int population, int k) {
    std::vector<int> pool(static_cast<size_t>(population));
    for (int i = 0; i < population; ++i) pool[static_cast<size_t>(i)] = i + 1;
    for (int i = 0; i < k; ++i) {
        uint64_t j = static_cast<uint64_t>(i) +
                     rng.below(static_cast<uint64_t>(population - i));
        std::swap(pool[static_cast<size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace gridminor
