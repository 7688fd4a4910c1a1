// SplitMix64: the PRNG behind every seeded demo and randomized test, chosen
// so that a published seed reproduces the same stream on any platform.
#pragma once

#include <cstdint>

namespace rns {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0; modulo bias is irrelevant at our sizes
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // uniform in [lo, hi] inclusive
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

}  // namespace rns
