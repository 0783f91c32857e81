#pragma once

#include <cstdint>

namespace stablemaps {

/// Deterministic 64-bit generator (splitmix64).  The standard engines and
/// distributions are not bit-stable across implementations, and reproducible
/// walks are part of the contract, so the generator is pinned here.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) via rejection sampling; bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        for (;;) {
            const std::uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace stablemaps
