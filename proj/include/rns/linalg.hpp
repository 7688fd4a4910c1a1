// Delayed-normalization product sums.
//
// Products of fractional payloads are exact integers at scale F^2; summing
// them in that extended form costs one digit step per term and rounds
// nothing. One normalization at the end gives the correctly rounded result,
// so a whole dot product carries a single rounding. The range budget
// M * max|payload|^2 <= (R-1)/2 is what makes the accumulation exact.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rns/fraction.hpp"

namespace rns {

struct FixedVector {
    SplitPtr split;
    std::vector<RnsInt> payloads;

    std::size_t size() const { return payloads.size(); }
};

struct FixedMatrix {
    SplitPtr split;
    std::size_t rows = 0, cols = 0;
    std::vector<RnsInt> payloads;  // row major

    const RnsInt& at(std::size_t r, std::size_t c) const { return payloads[r * cols + c]; }
    RnsInt& at(std::size_t r, std::size_t c) { return payloads[r * cols + c]; }
};

struct RangeBudgetReport {
    bool ok = false;
    BigInt required;  // terms * max_abs^2
    BigInt available; // (R-1)/2
    std::string to_string() const;
};

// exact check: terms * max_abs^2 <= (R-1)/2
RangeBudgetReport range_budget_check(const FracSplit& split, std::size_t terms,
                                     const BigInt& max_abs);

// single-rounding dot product; requires the range budget for max|payload|
RnsFixed dot_delayed(const FixedVector& x, const FixedVector& y, StepCounter* sc = nullptr);

// baseline that normalizes after every product, one rounding per term
RnsFixed dot_sequential(const FixedVector& x, const FixedVector& y, StepCounter* sc = nullptr);

// every output element a delayed dot product: M^3 single-step MACs,
// exactly rows*cols normalizations. Budget violations name the element.
FixedMatrix matmul_delayed(const FixedMatrix& a, const FixedMatrix& b, StepCounter* sc = nullptr);

}  // namespace rns
