#include "rns/rational.hpp"

#include <cmath>
#include <utility>

namespace rns {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        BigInt n = BigInt::from_decimal(s.substr(0, slash));
        BigInt d = BigInt::from_decimal(s.substr(slash + 1));
        if (d.is_zero()) throw ParseError("zero denominator in: " + std::string(s));
        return Rational(std::move(n), std::move(d));
    }
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return Rational(BigInt::from_decimal(s));
    std::string_view ipart = s.substr(0, dot);
    std::string_view fpart = s.substr(dot + 1);
    if (fpart.empty()) return Rational(BigInt::from_decimal(ipart));
    bool neg = !ipart.empty() && ipart[0] == '-';
    std::string digits(ipart.begin(), ipart.end());
    if (digits.empty() || digits == "-" || digits == "+") digits += '0';
    digits.append(fpart.begin(), fpart.end());
    BigInt n = BigInt::from_decimal(digits);
    BigInt d = BigInt::pow10(fpart.size());
    if (neg && !n.is_negative()) n = -n;  // "-0.5" parses magnitude 05
    return Rational(std::move(n), std::move(d));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

int Rational::compare(const Rational& rhs) const {
    return (num_ * rhs.den_).compare(rhs.num_ * den_);
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

std::string Rational::to_decimal(std::size_t places) const {
    BigInt scaled = round_div_half_away(num_ * BigInt::pow10(places), den_);
    std::string digits = scaled.abs().to_decimal();
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    std::string out;
    if (num_.is_negative() && !scaled.is_zero()) out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    // scale so the quotient carries ~60 significant bits
    long exp = static_cast<long>(num_.bit_length()) - static_cast<long>(den_.bit_length());
    BigInt n = num_.abs(), d = den_;
    long shift = 60 - exp;
    if (shift > 0)
        n = n << static_cast<std::size_t>(shift);
    else if (shift < 0)
        d = d << static_cast<std::size_t>(-shift);
    double q = static_cast<double>((n / d).to_i64());
    double r = std::ldexp(q, static_cast<int>(-shift));
    return num_.is_negative() ? -r : r;
}

BigInt round_div_half_away(const BigInt& n, const BigInt& d) {
    BigInt q, r;
    BigInt::divmod(n, d, q, r);
    // |r|*2 >= |d|  ->  bump away from zero
    if (!(r + r).abs().operator<(d.abs())) {
        q = q + BigInt((n.sign() * d.sign()) >= 0 ? 1 : -1);
    }
    return q;
}

}  // namespace rns
