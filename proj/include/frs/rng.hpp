#pragma once

#include <cstdint>
#include <initializer_list>

namespace frs {

/// Fixed-algorithm generators so that seeded runs are bit-identical across
/// platforms and standard libraries.

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform value in [0, bound) by rejection; bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % bound;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

/// Derives an independent child seed from a master seed and a path of
/// indices (grid index, trial index, ...).
inline std::uint64_t mix_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    SplitMix64 sm(master);
    std::uint64_t acc = sm.next();
    for (std::uint64_t part : path) {
        SplitMix64 inner(acc ^ (part + 0x9e3779b97f4a7c15ULL));
        acc = inner.next();
    }
    return acc;
}

} // namespace frs
