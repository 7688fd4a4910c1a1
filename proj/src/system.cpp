#include "rns/system.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rns/primes.hpp"

namespace rns {

namespace {

constexpr double kLog10Of2 = 0.30102999566398119521;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned bit_width_u32(std::uint32_t v) {
    unsigned w = 0;
    while (v) {
        ++w;
        v >>= 1;
    }
    return w;
}

// largest q^k strictly below 2^Q (k >= 1)
std::uint32_t largest_power_below(std::uint32_t q, unsigned Q) {
    const std::uint64_t bound = 1ull << Q;
    std::uint64_t m = q;
    while (m * q < bound) m *= q;
    return static_cast<std::uint32_t>(m);
}

// balanced product tree; the sequential fold is quadratic in p at Q=20
BigInt product_of(std::span<const std::uint32_t> moduli) {
    if (moduli.size() == 1) return BigInt(static_cast<std::int64_t>(moduli[0]));
    const std::size_t mid = moduli.size() / 2;
    return product_of(moduli.first(mid)) * product_of(moduli.subspan(mid));
}

}  // namespace

std::uint32_t mod_inverse_u32(std::uint32_t a, std::uint32_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = m, new_r = a % m;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw SystemError("modular inverse does not exist");
    if (t < 0) t += m;
    return static_cast<std::uint32_t>(t);
}

std::vector<std::uint32_t> mr_digits_of(BigInt x, std::span<const std::uint32_t> moduli) {
    std::vector<std::uint32_t> out;
    out.reserve(moduli.size());
    for (std::uint32_t m : moduli) {
        std::uint32_t d = x.mod_u32(m);
        out.push_back(d);
        x = (x - BigInt(static_cast<std::int64_t>(d))) / BigInt(static_cast<std::int64_t>(m));
    }
    return out;
}

RnsSystem::RnsSystem(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw SystemError("a system needs at least one modulus");
    for (std::uint32_t m : moduli_) {
        if (m < 2) throw SystemError("modulus " + std::to_string(m) + " is below 2");
        P_ = std::max(P_, m);
    }
    R_ = product_of(moduli_);
    Q_ = bit_width_u32(P_);
    signed_max_ = (R_ - BigInt(1)) >> 1;
    half_ceil_ = (R_ + BigInt(1)) >> 1;
}

SystemPtr RnsSystem::make_unchecked(std::vector<std::uint32_t> moduli) {
    return SystemPtr(new RnsSystem(std::move(moduli)));
}

SystemPtr RnsSystem::make(std::vector<std::uint32_t> moduli) {
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (gcd_u64(moduli[i], moduli[j]) != 1)
                throw SystemError("moduli " + std::to_string(moduli[i]) + " and " +
                                  std::to_string(moduli[j]) + " are not coprime");
    return make_unchecked(std::move(moduli));
}

void RnsSystem::build_tables() const {
    const std::size_t p = moduli_.size();
    inverse_table_.assign(p * p, 0);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            if (i != j) inverse_table_[i * p + j] = mod_inverse_u32(moduli_[i], moduli_[j]);
    half_mr_ = mr_digits_of(half_ceil_, moduli_);
}

const std::vector<std::uint32_t>& RnsSystem::inverse_table() const {
    std::call_once(tables_once_, [this] { build_tables(); });
    return inverse_table_;
}

const std::vector<std::uint32_t>& RnsSystem::half_mr_digits() const {
    std::call_once(tables_once_, [this] { build_tables(); });
    return half_mr_;
}

std::size_t RnsSystem::index_of(std::uint32_t modulus) const {
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        if (moduli_[i] == modulus) return i;
    throw SystemError("modulus " + std::to_string(modulus) + " is not part of this system");
}

SystemPtr natural_system(std::size_t p) {
    if (p == 0) throw SystemError("natural system needs p >= 1");
    return RnsSystem::make_unchecked(first_primes(p));
}

SystemPtr max_system_for_digit_width(unsigned Q) {
    if (Q < 2 || Q > 31) throw SystemError("unsupported digit width");
    return RnsSystem::make_unchecked(primes_below(1u << Q));
}

SystemPtr power_augmented_system(unsigned Q) {
    if (Q < 3 || Q > 31) throw SystemError("power augmentation needs Q >= 3");
    std::vector<std::uint32_t> moduli = primes_below(1u << Q);
    for (auto& m : moduli) m = largest_power_below(m, Q);
    return RnsSystem::make_unchecked(std::move(moduli));
}

SystemPtr power_augmented_top_system(unsigned Q, std::size_t count) {
    if (Q < 3 || Q > 31) throw SystemError("power augmentation needs Q >= 3");
    std::vector<std::uint32_t> candidates = primes_below(1u << Q);
    for (auto& m : candidates) m = largest_power_below(m, Q);
    if (count == 0 || count > candidates.size())
        throw SystemError("selection count must be in [1, " + std::to_string(candidates.size()) + "]");
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
    candidates.resize(count);
    std::sort(candidates.begin(), candidates.end());
    return RnsSystem::make_unchecked(std::move(candidates));
}

SystemMetrics metrics(const RnsSystem& sys) {
    SystemMetrics m;
    m.p = sys.p();
    m.P = sys.largest_modulus();
    m.Q = sys.digit_width();
    m.n_e = sys.range().log2();
    m.decimal_digits = static_cast<std::int64_t>(std::floor(m.n_e * kLog10Of2));
    m.efficiency = 100.0 * m.n_e / (static_cast<double>(m.p) * m.Q);
    m.ratio_p_over_ne = static_cast<double>(m.p) / m.n_e;
    m.binary_digits = static_cast<std::int64_t>(std::ceil(m.n_e / m.Q - 1e-9));
    return m;
}

double approx_digits(double n_bits) {
    if (n_bits < 2.0) throw std::domain_error("approx_digits needs n >= 2");
    double p = std::max(2.0, n_bits / std::log2(n_bits));
    for (int iter = 0; iter < 200; ++iter) {
        // plain p <- n/log2(p) diverges for small n; halve the update instead
        double next = 0.5 * (p + n_bits / std::log2(p));
        if (std::abs(next - p) <= 1e-9 * next) return next;
        p = next;
    }
    throw std::runtime_error("digit-count iteration failed to converge");
}

}  // namespace rns
