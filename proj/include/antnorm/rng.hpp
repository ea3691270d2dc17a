#pragma once

#include <cstdint>

namespace antnorm {

/// SplitMix64 generator (Steele/Lea/Flood). The full output sequence is a
/// pure function of the seed, on every platform, which is what the
/// reproducibility contract of the sampled scans and the simulator needs.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, n) by rejection; unbiased and seed-deterministic.
    uint64_t below(uint64_t n) {
        const uint64_t limit = ~0ULL - (~0ULL % n);
        uint64_t v = next();
        while (v >= limit)
            v = next();
        return v % n;
    }

private:
    uint64_t state_;
};

/// Stream for item `index` under a master seed. Work can be split across
/// any number of threads at any granularity: item i always sees the same
/// stream, so merged results do not depend on the partition.
inline SplitMix64 derived_stream(uint64_t master_seed, uint64_t index) {
    SplitMix64 mixer(index + 1);
    return SplitMix64(master_seed ^ mixer.next());
}

} // namespace antnorm
