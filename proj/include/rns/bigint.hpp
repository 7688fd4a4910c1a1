// Arbitrary-precision signed integer. Sign-magnitude, 32-bit limbs,
// little-endian, no trailing zero limbs. Division truncates toward zero.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rns {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    BigInt(int v) : BigInt(static_cast<std::int64_t>(v)) {}

    static BigInt from_u64(std::uint64_t v);
    static BigInt from_decimal(std::string_view s);
    static BigInt pow2(std::size_t k);
    static BigInt pow10(std::size_t k);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

    // Number of bits in |*this|; bit_length(0) == 0.
    std::size_t bit_length() const;

    // log2(|*this|) from the top 64 bits plus the limb exponent.
    // Accurate to ~1e-12 absolute at 2^23452; requires *this != 0.
    double log2() const;

    bool fits_i64() const;
    std::int64_t to_i64() const;  // throws std::overflow_error if out of range

    std::uint32_t mod_u32(std::uint32_t m) const;  // residue of |*this|
    std::string to_decimal() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt operator/(const BigInt& rhs) const;
    BigInt operator%(const BigInt& rhs) const;
    BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
    BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
    BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

    BigInt operator<<(std::size_t k) const;
    BigInt operator>>(std::size_t k) const;

    // quotient truncated toward zero, remainder with the sign of the dividend
    static void divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r);

    int compare(const BigInt& rhs) const;  // -1, 0, +1
    bool operator==(const BigInt& rhs) const { return compare(rhs) == 0; }
    bool operator!=(const BigInt& rhs) const { return compare(rhs) != 0; }
    bool operator<(const BigInt& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const BigInt& rhs) const { return compare(rhs) <= 0; }
    bool operator>(const BigInt& rhs) const { return compare(rhs) > 0; }
    bool operator>=(const BigInt& rhs) const { return compare(rhs) >= 0; }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& num,
                           const std::vector<std::uint32_t>& den,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r);
};

BigInt gcd(BigInt a, BigInt b);
BigInt pow(const BigInt& base, std::uint64_t exp);

}  // namespace rns
