#include "rns/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace rns {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on INT64_MIN
    std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    limbs_.push_back(static_cast<std::uint32_t>(mag));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

BigInt BigInt::from_u64(std::uint64_t v) {
    BigInt r;
    if (v == 0) return r;
    r.sign_ = 1;
    r.limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) r.limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    return r;
}

BigInt BigInt::from_decimal(std::string_view s) {
    std::size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i == s.size()) throw ParseError("empty integer literal");
    BigInt r;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw ParseError("invalid digit in integer literal: " + std::string(s));
        // r = r*10 + digit, in-place over the limb vector
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (auto& limb : r.limbs_) {
            std::uint64_t t = static_cast<std::uint64_t>(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(t);
            carry = t >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    r.sign_ = r.limbs_.empty() ? 0 : sign;
    r.trim();
    return r;
}

BigInt BigInt::pow2(std::size_t k) {
    BigInt r;
    r.sign_ = 1;
    r.limbs_.assign(k / 32 + 1, 0);
    r.limbs_.back() = 1u << (k % 32);
    return r;
}

BigInt BigInt::pow10(std::size_t k) { return pow(BigInt(10), k); }

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

double BigInt::log2() const {
    if (is_zero()) throw std::domain_error("log2 of zero");
    std::size_t bl = bit_length();
    if (bl <= 64) {
        std::uint64_t v = limbs_[0];
        if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        return std::log2(static_cast<double>(v));
    }
    BigInt top = *this >> (bl - 64);
    std::uint64_t v = top.limbs_[0] | (static_cast<std::uint64_t>(top.limbs_[1]) << 32);
    return static_cast<double>(bl - 64) + std::log2(static_cast<double>(v));
}

bool BigInt::fits_i64() const {
    if (limbs_.size() < 2) return true;
    if (limbs_.size() > 2) return false;
    std::uint64_t mag = limbs_[0] | (static_cast<std::uint64_t>(limbs_[1]) << 32);
    return sign_ > 0 ? mag <= 0x7fffffffffffffffull : mag <= 0x8000000000000000ull;
}

std::int64_t BigInt::to_i64() const {
    if (!fits_i64()) throw std::overflow_error("BigInt does not fit in 64 bits");
    std::uint64_t mag = 0;
    if (!limbs_.empty()) mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return sign_ < 0 ? -static_cast<std::int64_t>(mag - 1) - 1 : static_cast<std::int64_t>(mag);
}

std::uint32_t BigInt::mod_u32(std::uint32_t m) const {
    if (m == 0) throw std::domain_error("mod by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) rem = ((rem << 32) | limbs_[i]) % m;
    return static_cast<std::uint32_t>(rem);
}

std::string BigInt::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> mag = limbs_;
    std::string out;
    while (!mag.empty()) {
        // divide the magnitude by 10^9, emit the remainder
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        char buf[16];
        std::snprintf(buf, sizeof buf, mag.empty() ? "%llu" : "%09llu",
                      static_cast<unsigned long long>(rem));
        out.insert(0, buf);
    }
    if (sign_ < 0) out.insert(0, "-");
    return out;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

int BigInt::compare(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ < rhs.sign_ ? -1 : 1;
    int c = cmp_mag(*this, rhs);
    return sign_ < 0 ? -c : c;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> out(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t t = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out[i] = static_cast<std::uint32_t>(t);
        carry = t >> 32;
    }
    out[hi.size()] = static_cast<std::uint32_t>(carry);
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t t = static_cast<std::int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
        if (t < 0) {
            t += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(t);
    }
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t t = ai * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(t);
            carry = t >> 32;
        }
        out[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    BigInt r;
    if (sign_ == rhs.sign_) {
        r.limbs_ = add_mag(limbs_, rhs.limbs_);
        r.sign_ = sign_;
    } else {
        int c = cmp_mag(*this, rhs);
        if (c == 0) return BigInt();
        const BigInt& big = c > 0 ? *this : rhs;
        const BigInt& small = c > 0 ? rhs : *this;
        r.limbs_ = sub_mag(big.limbs_, small.limbs_);
        r.sign_ = big.sign_;
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigInt();
    BigInt r;
    r.limbs_ = mul_mag(limbs_, rhs.limbs_);
    r.sign_ = sign_ * rhs.sign_;
    r.trim();
    return r;
}

BigInt BigInt::operator<<(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::size_t words = k / 32, bits = k % 32;
    BigInt r;
    r.sign_ = sign_;
    r.limbs_.assign(limbs_.size() + words + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bits;
        r.limbs_[i + words] |= static_cast<std::uint32_t>(v);
        r.limbs_[i + words + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator>>(std::size_t k) const {
    std::size_t words = k / 32, bits = k % 32;
    if (words >= limbs_.size()) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.limbs_.assign(limbs_.size() - words, 0);
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        std::uint64_t v = limbs_[i + words] >> bits;
        if (bits && i + words + 1 < limbs_.size())
            v |= static_cast<std::uint64_t>(limbs_[i + words + 1]) << (32 - bits);
        r.limbs_[i] = static_cast<std::uint32_t>(v);
    }
    r.trim();
    return r;
}

// Knuth algorithm D on normalized 32-bit limbs.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& num,
                        const std::vector<std::uint32_t>& den,
                        std::vector<std::uint32_t>& q,
                        std::vector<std::uint32_t>& r) {
    if (den.size() == 1) {
        std::uint64_t d = den[0], rem = 0;
        q.assign(num.size(), 0);
        for (std::size_t i = num.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | num[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        r.assign(1, static_cast<std::uint32_t>(rem));
        return;
    }

    int shift = 0;
    for (std::uint32_t top = den.back(); top < 0x80000000u; top <<= 1) ++shift;

    auto shl = [](const std::vector<std::uint32_t>& v, int s) {
        std::vector<std::uint32_t> out(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::uint64_t t = static_cast<std::uint64_t>(v[i]) << s;
            out[i] |= static_cast<std::uint32_t>(t);
            out[i + 1] |= static_cast<std::uint32_t>(t >> 32);
        }
        return out;
    };

    std::vector<std::uint32_t> u = shl(num, shift);  // one spill limb on top
    std::vector<std::uint32_t> v = shl(den, shift);
    while (v.back() == 0) v.pop_back();
    std::size_t n = v.size(), m = u.size() - n - 1;
    q.assign(m + 1, 0);

    const std::uint64_t vtop = v[n - 1], vsec = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t u2 = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = u2 / vtop, rhat = u2 % vtop;
        while (qhat >= kBase || qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kBase) break;
        }
        // u[j..j+n] -= qhat * v
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t prod = qhat * v[i] + carry;
            carry = prod >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                             static_cast<std::int64_t>(prod & 0xffffffffull) - borrow;
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large: add v back
            t += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(s);
                c2 = s >> 32;
            }
            t += static_cast<std::int64_t>(c2);
        }
        u[j + n] = static_cast<std::uint32_t>(t);
        q[j] = static_cast<std::uint32_t>(qhat);
    }

    u.resize(n);
    if (shift) {
        for (std::size_t i = 0; i < n; ++i) {
            u[i] >>= shift;
            if (i + 1 < n) u[i] |= u[i + 1] << (32 - shift);
        }
    }
    r = std::move(u);
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r) {
    if (den.is_zero()) throw std::domain_error("division by zero");
    if (cmp_mag(num, den) < 0) {
        q = BigInt();
        r = num;
        return;
    }
    BigInt qq, rr;
    divmod_mag(num.limbs_, den.limbs_, qq.limbs_, rr.limbs_);
    qq.sign_ = num.sign_ * den.sign_;
    rr.sign_ = num.sign_;
    qq.trim();
    rr.trim();
    q = std::move(qq);
    r = std::move(rr);
}

BigInt BigInt::operator/(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return r;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt pow(const BigInt& base, std::uint64_t exp) {
    BigInt result(1), acc = base;
    while (exp) {
        if (exp & 1) result *= acc;
        exp >>= 1;
        if (exp) acc *= acc;
    }
    return result;
}

}  // namespace rns
