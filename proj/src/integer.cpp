#include "rns/integer.hpp"

#include <algorithm>

namespace rns {

RnsInt RnsInt::zero(SystemPtr sys) {
    RnsInt r;
    r.digits.assign(sys->p(), 0);
    r.sys = std::move(sys);
    return r;
}

RnsInt RnsInt::one(SystemPtr sys) { return from_i64(std::move(sys), 1); }

RnsInt RnsInt::from_i64(SystemPtr sys, std::int64_t k) {
    RnsInt r;
    r.digits.reserve(sys->p());
    for (std::uint32_t m : sys->moduli()) {
        std::int64_t d = k % static_cast<std::int64_t>(m);
        if (d < 0) d += m;
        r.digits.push_back(static_cast<std::uint32_t>(d));
    }
    r.sys = std::move(sys);
    return r;
}

void require_same_system(const RnsInt& a, const RnsInt& b) {
    if (a.sys == b.sys) return;
    if (a.sys && b.sys && a.sys->moduli() == b.sys->moduli()) return;
    throw SystemMismatchError("operands belong to different modulus sets");
}

RnsInt add(const RnsInt& a, const RnsInt& b, StepCounter* sc) {
    require_same_system(a, b);
    RnsInt r = a;
    const auto& moduli = a.sys->moduli();
    for (std::size_t i = 0; i < r.digits.size(); ++i) {
        std::uint32_t s = r.digits[i] + b.digits[i];
        if (s >= moduli[i]) s -= moduli[i];
        r.digits[i] = s;
    }
    count_steps(sc, 1);
    return r;
}

RnsInt sub(const RnsInt& a, const RnsInt& b, StepCounter* sc) {
    require_same_system(a, b);
    RnsInt r = a;
    const auto& moduli = a.sys->moduli();
    for (std::size_t i = 0; i < r.digits.size(); ++i) {
        std::uint32_t s = r.digits[i] + moduli[i] - b.digits[i];
        if (s >= moduli[i]) s -= moduli[i];
        r.digits[i] = s;
    }
    count_steps(sc, 1);
    return r;
}

RnsInt mul(const RnsInt& a, const RnsInt& b, StepCounter* sc) {
    require_same_system(a, b);
    RnsInt r = a;
    const auto& moduli = a.sys->moduli();
    for (std::size_t i = 0; i < r.digits.size(); ++i)
        r.digits[i] = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(r.digits[i]) * b.digits[i] % moduli[i]);
    count_steps(sc, 1);
    return r;
}

RnsInt neg(const RnsInt& a, StepCounter* sc) {
    RnsInt r = a;
    const auto& moduli = a.sys->moduli();
    for (std::size_t i = 0; i < r.digits.size(); ++i)
        if (r.digits[i] != 0) r.digits[i] = moduli[i] - r.digits[i];
    count_steps(sc, 1);
    return r;
}

RnsInt mul_small(const RnsInt& a, std::int64_t k, StepCounter* sc) {
    RnsInt r = a;
    const auto& moduli = a.sys->moduli();
    for (std::size_t i = 0; i < r.digits.size(); ++i) {
        std::int64_t km = k % static_cast<std::int64_t>(moduli[i]);
        if (km < 0) km += moduli[i];
        r.digits[i] = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(r.digits[i]) * static_cast<std::uint64_t>(km) % moduli[i]);
    }
    count_steps(sc, 1);
    return r;
}

bool is_zero(const RnsInt& a) {
    return std::all_of(a.digits.begin(), a.digits.end(), [](std::uint32_t d) { return d == 0; });
}

bool eq(const RnsInt& a, const RnsInt& b) {
    require_same_system(a, b);
    return a.digits == b.digits;
}

}  // namespace rns
