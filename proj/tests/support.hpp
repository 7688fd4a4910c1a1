// Shared test helpers: independent oracle paths and random value generation.
// Everything here reconstructs values with BigInt arithmetic only, never
// through the mixed-radix production path it is used to check.
#pragma once

#include <cstdint>
#include <vector>

#include "rns/convert.hpp"
#include "rns/integer.hpp"
#include "rns/rng.hpp"

namespace rns::testing {

// Chinese-remainder reconstruction: X = sum r_i * (R/m_i) * ((R/m_i)^-1 mod m_i) mod R,
// then signed decode. Test-only second path for reverse conversion.
inline BigInt crt_reverse(const RnsInt& a) {
    const auto& sys = *a.sys;
    const BigInt& R = sys.range();
    BigInt x;
    for (std::size_t i = 0; i < sys.p(); ++i) {
        const std::uint32_t m = sys.moduli()[i];
        BigInt Mi = R / BigInt(static_cast<std::int64_t>(m));
        std::uint32_t inv = mod_inverse_u32(Mi.mod_u32(m), m);
        std::uint64_t coeff = static_cast<std::uint64_t>(a.digits[i]) * inv % m;
        x += Mi * BigInt::from_u64(coeff);
    }
    x = x % R;
    if (x >= sys.half_ceil()) x -= R;
    return x;
}

// uniform signed value in [-max, max] with max given as BigInt
inline BigInt random_signed(SplitMix64& rng, const BigInt& max) {
    const std::size_t bits = max.bit_length();
    for (;;) {
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
}

// digit-by-digit modular reduction of a signed BigInt (independent encoder)
inline std::vector<std::uint32_t> oracle_residues(const BigInt& x, const RnsSystem& sys) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m : sys.moduli()) {
        std::uint32_t r = x.mod_u32(m);
        if (x.is_negative() && r != 0) r = m - r;
        out.push_back(r);
    }
    return out;
}

}  // namespace rns::testing
