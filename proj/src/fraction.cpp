#include "rns/fraction.hpp"

#include <algorithm>
#include <cmath>

namespace rns {

namespace {

// digits of x mod each modulus, for a nonnegative BigInt
std::vector<std::uint32_t> residues_of(const BigInt& x, const RnsSystem& sys) {
    std::vector<std::uint32_t> out;
    out.reserve(sys.p());
    for (std::uint32_t m : sys.moduli()) out.push_back(x.mod_u32(m));
    return out;
}

void add_unit_in_place(RnsInt& a) {
    const auto& moduli = a.sys->moduli();
    for (std::size_t j = 0; j < a.digits.size(); ++j) {
        ++a.digits[j];
        if (a.digits[j] == moduli[j]) a.digits[j] = 0;
    }
}

void negate_in_place(RnsInt& a) {
    const auto& moduli = a.sys->moduli();
    for (std::size_t j = 0; j < a.digits.size(); ++j)
        if (a.digits[j] != 0) a.digits[j] = moduli[j] - a.digits[j];
}

// The normalization core: round_half_away(Z/F) over the full system.
// Counted as the sign pass (p) plus the fused peel/rebuild pass (p-1).
RnsFixed scale_core(const RnsInt& z, const SplitPtr& split, StepCounter* sc) {
    const RnsSystem& sys = *split->system();
    const std::size_t p = sys.p();
    const auto& moduli = sys.moduli();

    RnsFixed out;
    out.split = split;

    // sign detection on the system-order expansion
    std::vector<std::size_t> sys_order(p);
    for (std::size_t i = 0; i < p; ++i) sys_order[i] = i;
    auto mr0 = detail::mrc_ordered(z, sys_order);
    const bool negative = detail::lex_compare(mr0, sys.half_mr_digits()) >= 0;

    RnsInt a = z;
    if (negative) negate_in_place(a);

    auto mr = detail::mrc_ordered(a, split->peel_order());
    const std::size_t p_f = split->frac_count();
    const bool round_up =
        detail::lex_compare(std::span(mr).first(p_f), split->half_f_mr()) >= 0;

    RnsInt q = RnsInt::zero(split->system());
    const auto& whole = split->whole_lanes();
    for (std::size_t k = whole.size(); k-- > 0;) {
        const std::uint32_t wm = moduli[whole[k]];
        const std::uint32_t d = mr[p_f + k];
        for (std::size_t j = 0; j < p; ++j)
            q.digits[j] = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(q.digits[j]) * (wm % moduli[j]) + d % moduli[j]) %
                moduli[j]);
    }
    if (round_up) add_unit_in_place(q);
    if (negative) negate_in_place(q);

    count_steps(sc, 2 * p - 1);
    count_normalization(sc);
    out.payload = std::move(q);
    return out;
}

}  // namespace

FracSplit::FracSplit(SystemPtr sys, std::vector<std::size_t> frac_idx)
    : sys_(std::move(sys)), frac_idx_(std::move(frac_idx)) {
    if (frac_idx_.empty()) throw SystemError("fractional split needs at least one modulus");
    const auto& moduli = sys_->moduli();
    std::vector<bool> is_frac(moduli.size(), false);
    F_ = BigInt(1);
    for (std::size_t i : frac_idx_) {
        if (is_frac[i]) throw SystemError("duplicate fractional modulus");
        is_frac[i] = true;
        F_ *= BigInt(static_cast<std::int64_t>(moduli[i]));
    }
    for (std::size_t i = 0; i < moduli.size(); ++i)
        if (!is_frac[i]) whole_idx_.push_back(i);
    W_ = sys_->range() / F_;

    peel_order_ = frac_idx_;
    peel_order_.insert(peel_order_.end(), whole_idx_.begin(), whole_idx_.end());

    std::vector<std::uint32_t> frac_moduli;
    for (std::size_t i : frac_idx_) frac_moduli.push_back(moduli[i]);
    half_f_mr_ = mr_digits_of((F_ + BigInt(1)) >> 1, frac_moduli);
    one_digits_ = residues_of(F_, *sys_);
}

bool FracSplit::same_as(const FracSplit& other) const {
    if (this == &other) return true;
    return sys_->moduli() == other.sys_->moduli() && frac_idx_ == other.frac_idx_;
}

SplitPtr FracSplit::make(SystemPtr sys, const std::vector<std::uint32_t>& frac_moduli) {
    std::vector<std::size_t> idx;
    idx.reserve(frac_moduli.size());
    for (std::uint32_t m : frac_moduli) idx.push_back(sys->index_of(m));
    return SplitPtr(new FracSplit(std::move(sys), std::move(idx)));
}

SplitPtr FracSplit::make_for_precision(SystemPtr sys, unsigned min_bits) {
    // largest moduli first until F reaches the requested precision
    std::vector<std::size_t> by_size(sys->p());
    for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
    const auto& moduli = sys->moduli();
    std::sort(by_size.begin(), by_size.end(),
              [&](std::size_t a, std::size_t b) { return moduli[a] > moduli[b]; });
    std::vector<std::size_t> idx;
    BigInt f(1);
    const BigInt target = BigInt::pow2(min_bits);
    for (std::size_t i : by_size) {
        if (f >= target) break;
        idx.push_back(i);
        f *= BigInt(static_cast<std::int64_t>(moduli[i]));
    }
    if (f < target) throw SystemError("system is too small for the requested fractional range");
    return SplitPtr(new FracSplit(std::move(sys), std::move(idx)));
}

RnsFixed RnsFixed::zero(SplitPtr split) {
    RnsFixed r;
    r.payload = RnsInt::zero(split->system());
    r.split = std::move(split);
    return r;
}

RnsFixed RnsFixed::one(SplitPtr split) {
    if (split->frac_range() > split->system()->signed_max())
        throw RangeError("1.0 is not representable: F exceeds the signed range");
    RnsFixed r;
    r.payload.sys = split->system();
    r.payload.digits = split->one_digits();
    r.split = std::move(split);
    return r;
}

void require_same_split(const RnsFixed& a, const RnsFixed& b) {
    if (a.split == b.split) return;
    if (a.split && b.split && a.split->same_as(*b.split)) return;
    throw SystemMismatchError("operands use different fractional splits");
}

RnsFixed forward_frac(const Rational& x, SplitPtr split, StepCounter* sc) {
    BigInt k = round_div_half_away(x.num() * split->frac_range(), x.den());
    RnsFixed r;
    r.payload = forward_int(k, split->system(), sc);
    r.split = std::move(split);
    return r;
}

Rational reverse_frac(const RnsFixed& a, StepCounter* sc) {
    return Rational(reverse_int(a.payload, sc), a.split->frac_range());
}

RnsFixed add(const RnsFixed& a, const RnsFixed& b, StepCounter* sc) {
    require_same_split(a, b);
    RnsFixed r;
    r.split = a.split;
    r.payload = add(a.payload, b.payload, sc);
    return r;
}

RnsFixed sub(const RnsFixed& a, const RnsFixed& b, StepCounter* sc) {
    require_same_split(a, b);
    RnsFixed r;
    r.split = a.split;
    r.payload = sub(a.payload, b.payload, sc);
    return r;
}

RnsFixed mul_int(const RnsFixed& a, const RnsInt& k, StepCounter* sc) {
    RnsFixed r;
    r.split = a.split;
    r.payload = mul(a.payload, k, sc);
    return r;
}

RnsFixed mul_int(const RnsFixed& a, std::int64_t k, StepCounter* sc) {
    RnsFixed r;
    r.split = a.split;
    r.payload = mul_small(a.payload, k, sc);
    return r;
}

RnsFixed scale_by_F(const RnsInt& z, SplitPtr split, StepCounter* sc) {
    return scale_core(z, split, sc);
}

RnsFixed mul(const RnsFixed& a, const RnsFixed& b, StepCounter* sc) {
    require_same_split(a, b);
    RnsInt prod = mul(a.payload, b.payload, sc);
    return scale_core(prod, a.split, sc);
}

namespace {

// log2 of the two-digit mixed-radix magnitude estimate, plus the exact
// estimate itself; digits in system order. Returns false for zero.
bool magnitude_estimate(const RnsInt& abs_value, double& log2_out, BigInt& est_out) {
    auto& sys = *abs_value.sys;
    std::vector<std::size_t> order(sys.p());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto mr = detail::mrc_ordered(abs_value, order);
    std::size_t top = mr.size();
    while (top > 0 && mr[top - 1] == 0) --top;
    if (top == 0) return false;
    const auto& moduli = sys.moduli();
    std::size_t i = top - 1;
    std::uint64_t factor = mr[i];
    std::size_t weight_lanes = i;
    if (i > 0) {
        factor = factor * moduli[i - 1] + mr[i - 1];
        weight_lanes = i - 1;
    }
    BigInt weight(1);
    double weight_log2 = 0.0;
    for (std::size_t j = 0; j < weight_lanes; ++j) {
        weight *= BigInt(static_cast<std::int64_t>(moduli[j]));
        weight_log2 += std::log2(static_cast<double>(moduli[j]));
    }
    est_out = BigInt::from_u64(factor) * weight;
    log2_out = std::log2(static_cast<double>(factor)) + weight_log2;
    return true;
}

}  // namespace

// The reciprocal iteration runs at a guard scale S = F * G, where G is a
// product of whole-set lanes chosen per call. Corrections near 1 then carry
// log2(G) more resolution than the result grid, which keeps the rounding
// drift of the iteration from being amplified by the quotient magnitude.
// The quotient itself is formed by one multiply and one normalization, so
// the result carries a single grid rounding.
RnsFixed div(const RnsFixed& a, const RnsFixed& b, StepCounter* sc, DivStats* stats) {
    require_same_split(a, b);
    const SplitPtr& split = a.split;
    const SystemPtr& sys = split->system();
    const auto& moduli = sys->moduli();

    if (is_zero(b.payload)) throw DivideByZeroError("fractional division by zero");
    if (stats) *stats = DivStats{};
    if (is_zero(a.payload)) return RnsFixed::zero(split);

    const int sa = sign_of(a.payload, sc);
    const int sb = sign_of(b.payload, sc);
    RnsInt na = a.payload, nb = b.payload;
    if (sa < 0) negate_in_place(na);
    if (sb < 0) negate_in_place(nb);

    double la = 0, lb = 0;
    BigInt est_a, est_b;
    magnitude_estimate(na, la, est_a);
    magnitude_estimate(nb, lb, est_b);
    count_steps(sc, sys->p());  // divisor magnitude pass

    const double lF = split->frac_range().log2();
    const double lmax = sys->signed_max().log2();

    const std::size_t fbits_for_cap = split->frac_range().bit_length();
    const int cap =
        static_cast<int>(std::ceil(std::log2(static_cast<double>(fbits_for_cap)))) + 2;

    // Guard lanes: grow S until it resolves both the quotient and the
    // dividend magnitude, closing the final gap with the smallest lane that
    // fits so the headroom cost of the overshoot stays at one lane.
    // Error budget: |q_err| <= (1.5 q + (k/2) va)/S + one grid rounding.
    const double q_mag = std::exp2(std::max(la - lb, 0.0));
    const double a_mag = std::exp2(std::max(la - lF, 0.0));
    const double needed =
        lF + std::log2((1.5 * q_mag + 0.5 * (cap + 1) * a_mag) / 1.5) + 1.0;
    std::vector<std::uint32_t> s_moduli;
    for (std::size_t i : split->frac_lanes()) s_moduli.push_back(moduli[i]);
    std::vector<std::uint32_t> whole;
    for (std::size_t i : split->whole_lanes()) whole.push_back(moduli[i]);
    std::sort(whole.begin(), whole.end());
    BigInt G(1);
    double lS = lF;
    while (lS < needed && !whole.empty()) {
        const double gap = needed - lS;
        std::size_t pick = whole.size() - 1;  // largest as fallback
        for (std::size_t i = 0; i < whole.size(); ++i)
            if (std::log2(static_cast<double>(whole[i])) >= gap) {
                pick = i;
                break;
            }
        const std::uint32_t m = whole[pick];
        whole.erase(whole.begin() + static_cast<std::ptrdiff_t>(pick));
        s_moduli.push_back(m);
        G *= BigInt(static_cast<std::int64_t>(m));
        lS += std::log2(static_cast<double>(m));
    }
    const double headroom =
        std::max(2.0 * lS + std::max(0.0, lF - lb), la + 1.0 + lS + lF - lb) + 1.5;
    if (lS < needed || headroom > lmax)
        throw RangeError("division needs more headroom than the signed range offers");

    SplitPtr guard = FracSplit::make(sys, s_moduli);
    const BigInt S = guard->frac_range();

    // divisor and reciprocal seed at the guard scale; b*G is exact
    RnsInt d = mul(nb, forward_int(G, sys, nullptr), sc);
    BigInt f0_int = round_div_half_away(S * split->frac_range(), est_b);
    RnsInt r = forward_int(f0_int, sys, nullptr);
    RnsInt f;

    RnsInt s_one{sys, guard->one_digits()};
    RnsInt s_hi = s_one, s_lo = s_one;
    add_unit_in_place(s_hi);
    negate_in_place(s_lo);
    add_unit_in_place(s_lo);
    negate_in_place(s_lo);  // S - 1
    const RnsInt s_two = add(s_one, s_one, nullptr);

    int iters = 1;  // seed application
    d = scale_core(mul(d, r, sc), guard, sc).payload;
    while (iters < cap) {
        f = sub(s_two, d, sc);
        // correction within one ulp of 1 at the guard scale: done, folding a
        // final sub-ulp correction into the reciprocal
        if (f.digits == s_one.digits || f.digits == s_hi.digits || f.digits == s_lo.digits) {
            if (f.digits != s_one.digits) {
                r = scale_core(mul(r, f, sc), guard, sc).payload;
                ++iters;
            }
            break;
        }
        r = scale_core(mul(r, f, sc), guard, sc).payload;
        d = scale_core(mul(d, f, sc), guard, sc).payload;
        ++iters;
    }
    if (stats) stats->iterations = iters;

    // single rounding onto the result grid
    RnsFixed q = scale_core(mul(na, r, sc), guard, sc);
    q.split = split;
    if (sa * sb < 0) negate_in_place(q.payload);
    return q;
}

BigInt denominator_count(const FracSplit& split) {
    return BigInt::pow2(split.frac_count()) - BigInt(1);
}

}  // namespace rns
