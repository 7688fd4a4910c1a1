// Conversion between weighted and residue form, and everything that rides on
// mixed-radix conversion: sign detection, magnitude comparison, base extension.
//
// The sequential MRC peel is the O(p) workhorse: digit i of the expansion is
// read off lane i, then (x - d_i) * m_i^-1 is applied to every remaining lane
// in parallel. Lexicographic order of the mixed-radix digits (most significant
// last) equals numeric order of the nonnegative representative.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rns/bigint.hpp"
#include "rns/integer.hpp"

namespace rns {

struct MixedRadix {
    SystemPtr sys;
    // digits[i] in [0, moduli[i]); value = d0 + d1*m0 + d2*m0*m1 + ...
    std::vector<std::uint32_t> digits;
};

enum class Ordering { Less, Equal, Greater };

// |x| <= (R-1)/2 required; cost ceil(bitlen(x)/Q) steps (min 1)
RnsInt forward_int(const BigInt& x, SystemPtr sys, StepCounter* sc = nullptr);

// expansion of the nonnegative representative, system modulus order; p steps
MixedRadix to_mixed_radix(const RnsInt& a, StepCounter* sc = nullptr);

// positional evaluation of the expansion, exact
BigInt from_mixed_radix(const MixedRadix& m);

// signed value via MRC; p steps
BigInt reverse_int(const RnsInt& a, StepCounter* sc = nullptr);

// sign of the signed value: -1, 0, +1; p steps
int sign_of(const RnsInt& a, StepCounter* sc = nullptr);

// signed order of a and b; p steps when digitwise equal, 2p otherwise
Ordering compare(const RnsInt& a, const RnsInt& b, StepCounter* sc = nullptr);

// Re-encodes a value held over a modulus subset onto the full target set.
// Every modulus of a's system must appear in target. 2 * p_subset steps.
RnsInt base_extend(const RnsInt& a, SystemPtr target, StepCounter* sc = nullptr);

// Reference integer division, truncated toward zero. This is a conversion
// round trip (reverse both operands, divide, re-encode), not a digit-parallel
// algorithm: it costs two reverse passes plus a forward conversion and exists
// as a baseline, not as a fast path.
RnsInt div_reference(const RnsInt& a, const RnsInt& b, StepCounter* sc = nullptr);

namespace detail {
// MRC peel visiting lanes in the given index order; digits come back in that
// order. Shared by the public MRC, sign detection, and fractional scaling.
std::vector<std::uint32_t> mrc_ordered(const RnsInt& a, std::span<const std::size_t> order);

// lexicographic compare (most significant digit last), digits in equal radix order
int lex_compare(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
}  // namespace detail

}  // namespace rns
