#pragma once

#include <cstdint>

namespace minors {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** seeded through splitmix64. This is the single generator used
/// everywhere randomness appears; reports record its name and seed so runs
/// can be reproduced exactly.
class Xoshiro256 {
public:
    static constexpr const char* kName = "xoshiro256**";

    explicit Xoshiro256(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform value in [0, bound).
    uint64_t next_below(uint64_t bound) {
        // rejection sampling over the top multiple of bound
        const uint64_t threshold = -bound % bound;
        for (;;) {
            const uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static constexpr uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    uint64_t s_[4];
};

/// Deterministic sub-seed for shard i of a sharded computation with base seed.
inline uint64_t shard_seed(uint64_t seed, uint64_t shard_index) {
    uint64_t sm = seed ^ (0x9e3779b97f4a7c15ULL * (shard_index + 1));
    return splitmix64(sm);
}

} // namespace minors
