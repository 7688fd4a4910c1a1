#include "rns/convert.hpp"

#include <numeric>

namespace rns {

namespace detail {

std::vector<std::uint32_t> mrc_ordered(const RnsInt& a, std::span<const std::size_t> order) {
    const auto& moduli = a.sys->moduli();
    const auto& inv = a.sys->inverse_table();
    const std::size_t p = moduli.size();
    std::vector<std::uint32_t> work = a.digits;
    std::vector<std::uint32_t> out(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t i = order[k];
        const std::uint32_t d = work[i];
        out[k] = d;
        for (std::size_t l = k + 1; l < order.size(); ++l) {
            const std::size_t j = order[l];
            std::int64_t t = (static_cast<std::int64_t>(work[j]) - d) % moduli[j];
            if (t < 0) t += moduli[j];
            work[j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) * inv[i * p + j] %
                                                 moduli[j]);
        }
    }
    return out;
}

int lex_compare(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace detail

namespace {

std::vector<std::size_t> identity_order(std::size_t p) {
    std::vector<std::size_t> order(p);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

}  // namespace

RnsInt forward_int(const BigInt& x, SystemPtr sys, StepCounter* sc) {
    if (x.abs() > sys->signed_max())
        throw RangeError("value " + x.to_decimal() + " exceeds the signed range +/-" +
                         sys->signed_max().to_decimal());
    RnsInt r;
    r.digits.reserve(sys->p());
    const bool negative = x.is_negative();
    for (std::uint32_t m : sys->moduli()) {
        std::uint32_t d = x.mod_u32(m);
        if (negative && d != 0) d = m - d;
        r.digits.push_back(d);
    }
    std::size_t chunks = (x.bit_length() + sys->digit_width() - 1) / sys->digit_width();
    count_steps(sc, chunks ? chunks : 1);
    r.sys = std::move(sys);
    return r;
}

MixedRadix to_mixed_radix(const RnsInt& a, StepCounter* sc) {
    MixedRadix m;
    m.sys = a.sys;
    m.digits = detail::mrc_ordered(a, identity_order(a.sys->p()));
    count_steps(sc, a.sys->p());
    return m;
}

BigInt from_mixed_radix(const MixedRadix& m) {
    const auto& moduli = m.sys->moduli();
    BigInt x;
    for (std::size_t i = m.digits.size(); i-- > 0;) {
        x = x * BigInt(static_cast<std::int64_t>(moduli[i])) +
            BigInt(static_cast<std::int64_t>(m.digits[i]));
    }
    return x;
}

BigInt reverse_int(const RnsInt& a, StepCounter* sc) {
    MixedRadix m;
    m.sys = a.sys;
    m.digits = detail::mrc_ordered(a, identity_order(a.sys->p()));
    count_steps(sc, a.sys->p());
    BigInt x = from_mixed_radix(m);
    if (x >= a.sys->half_ceil()) x -= a.sys->range();
    return x;
}

int sign_of(const RnsInt& a, StepCounter* sc) {
    auto mr = detail::mrc_ordered(a, identity_order(a.sys->p()));
    count_steps(sc, a.sys->p());
    if (detail::lex_compare(mr, a.sys->half_mr_digits()) >= 0) return -1;
    for (std::uint32_t d : mr)
        if (d) return 1;
    return 0;
}

Ordering compare(const RnsInt& a, const RnsInt& b, StepCounter* sc) {
    require_same_system(a, b);
    if (a.digits == b.digits) {
        count_steps(sc, a.sys->p());
        return Ordering::Equal;
    }
    const auto order = identity_order(a.sys->p());
    auto mra = detail::mrc_ordered(a, order);
    auto mrb = detail::mrc_ordered(b, order);
    count_steps(sc, 2 * a.sys->p());
    const auto& half = a.sys->half_mr_digits();
    const bool neg_a = detail::lex_compare(mra, half) >= 0;
    const bool neg_b = detail::lex_compare(mrb, half) >= 0;
    if (neg_a != neg_b) return neg_a ? Ordering::Less : Ordering::Greater;
    // same half-range: representative order is value order
    return detail::lex_compare(mra, mrb) < 0 ? Ordering::Less : Ordering::Greater;
}

RnsInt div_reference(const RnsInt& a, const RnsInt& b, StepCounter* sc) {
    require_same_system(a, b);
    if (is_zero(b)) throw DivideByZeroError("integer division by zero");
    BigInt q = reverse_int(a, sc) / reverse_int(b, sc);
    return forward_int(q, a.sys, sc);
}

RnsInt base_extend(const RnsInt& a, SystemPtr target, StepCounter* sc) {
    const auto& sub_moduli = a.sys->moduli();
    const std::size_t p_sub = sub_moduli.size();
    // map subset lanes into the target (throws if one is missing)
    for (std::uint32_t m : sub_moduli) target->index_of(m);

    auto mr = detail::mrc_ordered(a, identity_order(p_sub));
    RnsInt r = RnsInt::zero(target);
    const auto& moduli = target->moduli();
    for (std::size_t k = p_sub; k-- > 0;) {
        for (std::size_t j = 0; j < moduli.size(); ++j) {
            std::uint64_t t = static_cast<std::uint64_t>(r.digits[j]) * (sub_moduli[k] % moduli[j]) +
                              mr[k] % moduli[j];
            r.digits[j] = static_cast<std::uint32_t>(t % moduli[j]);
        }
    }
    count_steps(sc, 2 * p_sub);
    return r;
}

}  // namespace rns
