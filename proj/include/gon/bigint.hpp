#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace gon {

// Sign-magnitude arbitrary-precision integer, base 2^32.
// Sized for exact linear algebra on desk-scale lattices (dims <= 12),
// not for cryptographic workloads.
class BigInt {
public:
    BigInt() : neg_(false) {}
    BigInt(std::int64_t v) : neg_(v < 0) {
        std::uint64_t m = neg_ ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
        if (m) mag_.push_back(static_cast<std::uint32_t>(m));
        if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) { neg = s[i] == '-'; ++i; }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return mag_.empty(); }
    bool negative() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        std::uint64_t m = mag64();
        return neg_ ? m <= 0x8000000000000000ULL : m < 0x8000000000000000ULL;
    }
    std::int64_t to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        std::uint64_t m = mag64();
        return neg_ ? -static_cast<std::int64_t>(m - 1) - 1 : static_cast<std::int64_t>(m);
    }
    double to_double() const {
        double r = 0.0;
        for (std::size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
        return neg_ ? -r : r;
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_ && !r.mag_.empty();
            return r;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.neg_ = a.neg_; }
        else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.neg_ = b.neg_; }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j]
                                  + r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry) {
                std::uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.neg_ = a.neg_ != b.neg_;
        return r;
    }

    // truncating division (quotient rounds toward zero), remainder has sign of dividend
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); r = a; return; }
        if (b.mag_.size() == 1) {
            q.mag_ = a.mag_;
            std::uint32_t rem = q.divmod_small(b.mag_[0]);
            q.neg_ = (a.neg_ != b.neg_) && !q.is_zero();
            r = BigInt(static_cast<std::int64_t>(rem));
            if (a.neg_ && !r.is_zero()) r.neg_ = true;
            return;
        }
        divmod_knuth(a.mag_, b.mag_, q.mag_, r.mag_);
        q.trim(); r.trim();
        q.neg_ = (a.neg_ != b.neg_) && !q.is_zero();
        r.neg_ = a.neg_ && !r.is_zero();
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r; divmod(a, b, q, r); return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r; divmod(a, b, q, r); return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    BigInt abs() const { BigInt r = *this; r.neg_ = false; return r; }

    static BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = false; b.neg_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
            b.neg_ = false;
        }
        return a;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigInt t = *this;
        std::string digits;
        while (!t.is_zero()) {
            std::uint32_t rem = t.divmod_small(10);
            digits.push_back(static_cast<char>('0' + rem));
        }
        if (neg_) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

private:
    bool neg_;
    std::vector<std::uint32_t> mag_; // little-endian limbs

    std::uint64_t mag64() const {
        std::uint64_t m = 0;
        if (mag_.size() > 1) m = static_cast<std::uint64_t>(mag_[1]) << 32;
        if (!mag_.empty()) m |= mag_[0];
        return m;
    }

    void trim() { while (!mag_.empty() && mag_.back() == 0) mag_.pop_back(); if (mag_.empty()) neg_ = false; }

    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }
    void add_small(std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < mag_.size(); ++i) {
            std::uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }
    std::uint32_t divmod_small(std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag_[i];
            mag_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<std::uint32_t>(rem);
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < small.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + small[i] + carry;
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        for (std::size_t i = small.size(); carry && i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry;
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            borrow = cur < 0;
            if (cur < 0) cur += (static_cast<std::int64_t>(1) << 32);
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on normalized limbs; |a| >= |b|, b has >= 2 limbs.
    static void divmod_knuth(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b,
                             std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        int shift = 0;
        std::uint32_t top = b.back();
        while (!(top & 0x80000000u)) { top <<= 1; ++shift; }
        shl_bits(a, shift);
        shl_bits(b, shift);
        std::size_t n = b.size(), m = a.size() - n;
        a.push_back(0);
        q.assign(m + 1, 0);
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(a[j + n]) << 32) | a[j + n - 1];
            std::uint64_t qhat = num / b[n - 1];
            std::uint64_t rhat = num % b[n - 1];
            while (qhat > 0xffffffffULL ||
                   qhat * b[n - 2] > ((rhat << 32) | a[j + n - 2])) {
                --qhat;
                rhat += b[n - 1];
                if (rhat > 0xffffffffULL) break;
            }
            // multiply-subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * b[i] + carry;
                carry = p >> 32;
                std::int64_t sub = static_cast<std::int64_t>(a[i + j]) -
                                   static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
                borrow = sub < 0;
                if (sub < 0) sub += (static_cast<std::int64_t>(1) << 32);
                a[i + j] = static_cast<std::uint32_t>(sub);
            }
            std::int64_t sub = static_cast<std::int64_t>(a[j + n]) -
                               static_cast<std::int64_t>(carry) - borrow;
            bool fix = sub < 0;
            if (fix) sub += (static_cast<std::int64_t>(1) << 32);
            a[j + n] = static_cast<std::uint32_t>(sub);
            if (fix) {
                // qhat too large by one
                --qhat;
                std::uint64_t c = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(a[i + j]) + b[i] + c;
                    a[i + j] = static_cast<std::uint32_t>(cur);
                    c = cur >> 32;
                }
                a[j + n] = static_cast<std::uint32_t>(a[j + n] + c);
            }
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        a.resize(n);
        shr_bits(a, shift);
        r = a;
    }
    static void shl_bits(std::vector<std::uint32_t>& v, int s) {
        if (!s) return;
        std::uint32_t carry = 0;
        for (auto& limb : v) {
            std::uint32_t next = limb >> (32 - s);
            limb = (limb << s) | carry;
            carry = next;
        }
        if (carry) v.push_back(carry);
    }
    static void shr_bits(std::vector<std::uint32_t>& v, int s) {
        if (!s) return;
        std::uint32_t carry = 0;
        for (std::size_t i = v.size(); i-- > 0;) {
            std::uint32_t next = v[i] << (32 - s);
            v[i] = (v[i] >> s) | carry;
            carry = next;
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
};

} // namespace gon
