// Digit-step instrumentation for the clock model of a digit-parallel machine.
//
// One digit step = one clock in which every digit lane performs at most one
// table-lookup-class operation; a parallel accumulator bank working in the
// same clock does not count extra. Charged costs:
//
//   integer add/sub/mul/neg/scalar-mul    1
//   forward conversion                    max(1, ceil(bitlen/Q))
//   mixed-radix conversion                p       (p-1 peels + final latch)
//   sign detection                        p
//   reverse conversion                    p       (peel fused with accumulate)
//   compare                               p (digit-equal fast path) .. 2p
//   normalization (divide by F, round)    2p - 1  (sign pass p, fused scale pass p-1)
//   fractional multiply                   2p      (payload product + normalization)
//
// Counters are explicit handles passed by the caller; there is no global
// counter state. Operations taking a Counter* treat nullptr as "don't count".
#pragma once

#include <cstdint>

namespace rns {

struct StepCounter {
    std::uint64_t digit_steps = 0;
    std::uint64_t normalizations = 0;

    void add(std::uint64_t n) { digit_steps += n; }
    void reset() { *this = StepCounter{}; }
};

inline void count_steps(StepCounter* c, std::uint64_t n) {
    if (c) c->digit_steps += n;
}

inline void count_normalization(StepCounter* c) {
    if (c) ++c->normalizations;
}

}  // namespace rns
