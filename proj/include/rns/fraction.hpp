// Fixed-point fractional residue arithmetic.
//
// A fractional value is an integer payload X read as X/F, where F is the
// product of the moduli designated fractional. Addition, subtraction and
// multiplication by an integer act on the payload directly and stay single
// digit-step operations. A full fractional multiply forms the payload
// product X*Y (scale F^2) and normalizes: divide by F with one conditional
// rounding, done in the residue domain by a mixed-radix peel that visits the
// fractional lanes first. The first p_f peeled digits are the remainder
// |Z| mod F, the rest expand floor(|Z|/F), which is rebuilt onto every lane
// on the fly. Rounding is half away from zero, so negation commutes with
// every operation.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rns/convert.hpp"
#include "rns/rational.hpp"

namespace rns {

class FracSplit;
using SplitPtr = std::shared_ptr<const FracSplit>;

class FracSplit {
public:
    const SystemPtr& system() const { return sys_; }
    const BigInt& frac_range() const { return F_; }   // F, product of fractional moduli
    const BigInt& whole_range() const { return W_; }  // R/F
    std::size_t frac_count() const { return frac_idx_.size(); }
    const std::vector<std::size_t>& frac_lanes() const { return frac_idx_; }
    const std::vector<std::size_t>& whole_lanes() const { return whole_idx_; }
    const std::vector<std::uint32_t>& one_digits() const { return one_digits_; }

    // peel order for normalization: fractional lanes first
    const std::vector<std::size_t>& peel_order() const { return peel_order_; }
    // mixed-radix digits of ceil(F/2) over the fractional lanes, peel order
    const std::vector<std::uint32_t>& half_f_mr() const { return half_f_mr_; }

    bool same_as(const FracSplit& other) const;

    // explicit fractional modulus set (each must belong to the system)
    static SplitPtr make(SystemPtr sys, const std::vector<std::uint32_t>& frac_moduli);
    // default policy: largest moduli first until F >= 2^min_bits
    static SplitPtr make_for_precision(SystemPtr sys, unsigned min_bits);

private:
    FracSplit(SystemPtr sys, std::vector<std::size_t> frac_idx);

    SystemPtr sys_;
    std::vector<std::size_t> frac_idx_, whole_idx_, peel_order_;
    BigInt F_, W_;
    std::vector<std::uint32_t> half_f_mr_;
    std::vector<std::uint32_t> one_digits_;  // residues of F (the payload of 1.0)
};

struct RnsFixed {
    SplitPtr split;
    RnsInt payload;  // semantic value = signed(payload) / F

    static RnsFixed zero(SplitPtr split);
    static RnsFixed one(SplitPtr split);  // payload F; needs |F| <= (R-1)/2
};

struct DivStats {
    int iterations = 0;  // multiply rounds, seed application included
};

void require_same_split(const RnsFixed& a, const RnsFixed& b);

// payload = round_half_away(x * F); exact whenever x*F is an integer
RnsFixed forward_frac(const Rational& x, SplitPtr split, StepCounter* sc = nullptr);

// exact rational signed(payload)/F, lowest terms
Rational reverse_frac(const RnsFixed& a, StepCounter* sc = nullptr);

RnsFixed add(const RnsFixed& a, const RnsFixed& b, StepCounter* sc = nullptr);
RnsFixed sub(const RnsFixed& a, const RnsFixed& b, StepCounter* sc = nullptr);
RnsFixed mul_int(const RnsFixed& a, const RnsInt& k, StepCounter* sc = nullptr);
RnsFixed mul_int(const RnsFixed& a, std::int64_t k, StepCounter* sc = nullptr);

// round_half_away(Z/F) re-encoded over the full system; 2p-1 steps
// (sign detection pass p, fused peel/rebuild pass p-1), one normalization
RnsFixed scale_by_F(const RnsInt& z, SplitPtr split, StepCounter* sc = nullptr);

// |result - a*b| <= 1/(2F) provided |Xa*Xb| <= (R-1)/2; 2p steps
RnsFixed mul(const RnsFixed& a, const RnsFixed& b, StepCounter* sc = nullptr);

// Goldschmidt iteration with a two-digit mixed-radix reciprocal seed.
// Requires headroom for the iteration's payload products (roughly
// F * max(F, |quotient payload|) within the signed range), else RangeError.
RnsFixed div(const RnsFixed& a, const RnsFixed& b, StepCounter* sc = nullptr,
             DivStats* stats = nullptr);

// 2^p_f - 1: denominators representable exactly under a squarefree F
BigInt denominator_count(const FracSplit& split);

}  // namespace rns
