// Carry-free digit-parallel signed integer arithmetic over a fixed system.
//
// A value is one residue per modulus. add/sub/mul/neg act per digit with no
// interaction between lanes and are charged a single digit step regardless
// of p. Values wrap modulo R; the signed reading (negative iff the residue
// class is >= ceil(R/2)) is applied only at conversion boundaries.
//
// Digit lanes compute with native word modulo. Hardware realizations would
// use per-modulus lookup tables instead; swapping the lane kernel is the
// intended extension point and nothing above this layer would notice.
#pragma once

#include <cstdint>
#include <vector>

#include "rns/counter.hpp"
#include "rns/errors.hpp"
#include "rns/system.hpp"

namespace rns {

struct RnsInt {
    SystemPtr sys;
    std::vector<std::uint32_t> digits;  // digits[i] in [0, moduli[i])

    static RnsInt zero(SystemPtr sys);
    static RnsInt one(SystemPtr sys);
    // k reduced into every lane; handy for small constants in tests and demos
    static RnsInt from_i64(SystemPtr sys, std::int64_t k);
};

// throws SystemMismatchError unless a and b share one modulus set
void require_same_system(const RnsInt& a, const RnsInt& b);

RnsInt add(const RnsInt& a, const RnsInt& b, StepCounter* sc = nullptr);
RnsInt sub(const RnsInt& a, const RnsInt& b, StepCounter* sc = nullptr);
RnsInt mul(const RnsInt& a, const RnsInt& b, StepCounter* sc = nullptr);
RnsInt neg(const RnsInt& a, StepCounter* sc = nullptr);
RnsInt mul_small(const RnsInt& a, std::int64_t k, StepCounter* sc = nullptr);

bool is_zero(const RnsInt& a);
bool eq(const RnsInt& a, const RnsInt& b);

}  // namespace rns
