#pragma once

#include "rns/bigint.hpp"
#include "rns/rng.hpp"

namespace rns {

// uniform signed BigInt in [-max, max], driven by SplitMix64 so a given seed
// reproduces the same sequence everywhere
inline BigInt random_signed(SplitMix64& rng, const BigInt& max) {
    const std::size_t bits = max.bit_length();
    BigInt v;
    std::size_t produced = 0;
    while (produced < bits + 8) {
        v = (v << 32) + BigInt::from_u64(rng.next() & 0xffffffffull);
        produced += 32;
    }
    v = v % (max + BigInt(1));
    if (rng.next() & 1) v = -v;
    return v;
}

}  // namespace rns
