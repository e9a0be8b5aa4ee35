#pragma once

#include <cstdint>

namespace qre {

// Splittable counter-style RNG streams. Every consumer of randomness derives
// its own stream from (master seed, lane indices), so results do not depend
// on evaluation order or parallelism degree.

struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

inline uint64_t mix_seed(uint64_t master, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    SplitMix64 sm{master};
    uint64_t h = sm.next();
    sm.state = h ^ (a * 0x9E3779B97F4A7C15ULL);
    h = sm.next();
    sm.state = h ^ (b * 0xC2B2AE3D27D4EB4FULL);
    h = sm.next();
    sm.state = h ^ (c * 0x165667B19E3779F9ULL);
    return sm.next();
}

// xoshiro256** seeded via SplitMix64.
class RngStream {
  public:
    explicit RngStream(uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& w : s_) w = sm.next();
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

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

} // namespace qre
