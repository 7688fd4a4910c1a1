// Exact rational over BigInt. Always normalized: den > 0, gcd(num, den) == 1.
#pragma once

#include <string>
#include <string_view>

#include "rns/bigint.hpp"

namespace rns {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d);

    // Accepts "a/b", optionally signed decimal "12.345", or a plain integer.
    static Rational parse(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;  // throws on zero divisor

    int compare(const Rational& rhs) const;
    bool operator==(const Rational& rhs) const { return compare(rhs) == 0; }
    bool operator!=(const Rational& rhs) const { return compare(rhs) != 0; }
    bool operator<(const Rational& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const Rational& rhs) const { return compare(rhs) <= 0; }
    bool operator>(const Rational& rhs) const { return compare(rhs) > 0; }
    bool operator>=(const Rational& rhs) const { return compare(rhs) >= 0; }

    Rational abs() const { return num_.is_negative() ? -*this : *this; }

    // "a/b", or just "a" when the denominator is 1
    std::string to_string() const;
    // fixed-point decimal with `places` fraction digits, round half away from zero
    std::string to_decimal(std::size_t places) const;
    double to_double() const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

// round(n/d) half away from zero; d must be nonzero
BigInt round_div_half_away(const BigInt& n, const BigInt& d);

}  // namespace rns
