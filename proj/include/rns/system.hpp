// Modulus-set construction and system-level metrics.
//
// An RnsSystem is an ordered list of pairwise-coprime moduli together with
// the quantities every other layer needs: digit count p, largest modulus P,
// digit encoding width Q = floor(log2(P)) + 1, and the exact range R (the
// product of the moduli). Width-derived metrics (n_e, efficiency, ...) are
// always computed from the exact R, never by summing per-modulus float logs.
//
// Systems are immutable once built and are handed around as shared_ptr;
// the mixed-radix inverse table is materialized on first arithmetic use and
// is read-only afterwards, so sharing across threads needs no locking by
// the caller.
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "rns/bigint.hpp"

namespace rns {

struct SystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class RnsSystem;
using SystemPtr = std::shared_ptr<const RnsSystem>;

class RnsSystem {
public:
    const std::vector<std::uint32_t>& moduli() const { return moduli_; }
    std::size_t p() const { return moduli_.size(); }
    std::uint32_t largest_modulus() const { return P_; }
    unsigned digit_width() const { return Q_; }  // Q = floor(log2 P) + 1
    const BigInt& range() const { return R_; }

    // largest signed magnitude, (R-1)/2
    const BigInt& signed_max() const { return signed_max_; }
    // signed decode boundary, ceil(R/2): residues >= this decode as negative
    const BigInt& half_ceil() const { return half_ceil_; }

    // inv[i*p + j] = moduli[i]^-1 mod moduli[j], for every i != j
    const std::vector<std::uint32_t>& inverse_table() const;
    // mixed-radix digits of half_ceil() in system order, for sign detection
    const std::vector<std::uint32_t>& half_mr_digits() const;

    std::size_t index_of(std::uint32_t modulus) const;  // throws if absent

    // Validates pairwise coprimality; diagnostics name the offending pair.
    static SystemPtr make(std::vector<std::uint32_t> moduli);

private:
    explicit RnsSystem(std::vector<std::uint32_t> moduli);
    static SystemPtr make_unchecked(std::vector<std::uint32_t> moduli);

    std::vector<std::uint32_t> moduli_;
    std::uint32_t P_ = 0;
    unsigned Q_ = 0;
    BigInt R_, signed_max_, half_ceil_;

    mutable std::once_flag tables_once_;
    mutable std::vector<std::uint32_t> inverse_table_;
    mutable std::vector<std::uint32_t> half_mr_;
    void build_tables() const;

    friend SystemPtr natural_system(std::size_t);
    friend SystemPtr max_system_for_digit_width(unsigned);
    friend SystemPtr power_augmented_system(unsigned);
    friend SystemPtr power_augmented_top_system(unsigned, std::size_t);
};

// The first p primes ("natural" modulus sequence). p >= 1.
SystemPtr natural_system(std::size_t p);

// All primes below 2^Q, i.e. the largest natural system of digit width Q. Q >= 2.
SystemPtr max_system_for_digit_width(unsigned Q);

// The natural set for width Q with every small prime q replaced by the
// largest power q^k < 2^Q (k >= 2 where one exists). Same digit count,
// strictly larger range. Q >= 3.
SystemPtr power_augmented_system(unsigned Q);

// The `count` largest pairwise-coprime moduli below 2^Q, drawing each prime's
// largest in-range power. Maximizes per-digit efficiency at a fixed count.
SystemPtr power_augmented_top_system(unsigned Q, std::size_t count);

struct SystemMetrics {
    std::size_t p = 0;
    std::uint32_t P = 0;
    unsigned Q = 0;
    double n_e = 0.0;             // log2(R)
    std::int64_t decimal_digits = 0;  // floor(log10 R)
    double efficiency = 0.0;      // 100 * n_e / (p*Q)
    double ratio_p_over_ne = 0.0;
    std::int64_t binary_digits = 0;   // ceil(n_e / Q)
};

SystemMetrics metrics(const RnsSystem& sys);

// Solves p = n / log2(p) (digit count equivalent to n bits) by damped
// fixed-point iteration to 1e-9 relative tolerance. n >= 2.
double approx_digits(double n_bits);

// mixed-radix digits of a nonnegative x for the given modulus order
std::vector<std::uint32_t> mr_digits_of(BigInt x, std::span<const std::uint32_t> moduli);

// modular inverse of a mod m for coprime a, m < 2^31
std::uint32_t mod_inverse_u32(std::uint32_t a, std::uint32_t m);

}  // namespace rns
