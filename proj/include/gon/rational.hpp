#pragma once

#include <stdexcept>
#include <string>

#include "gon/bigint.hpp"

namespace gon {

// Exact rational, always normalized: den > 0, gcd(num, den) = 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    // accepts "p", "-p/q", "p/q"
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt::from_string(s));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }
    bool is_integer() const { return den_ == BigInt(1); }

    double to_double() const {
        // good enough for reporting; exact paths never round-trip through here
        return num_.to_double() / den_.to_double();
    }

    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, tag{}); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_.negative() ? -*this : *this; }

    Rational pow(unsigned e) const {
        Rational r(1);
        Rational base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    // exact dyadic representation of a double
    static Rational from_double(double v) {
        if (v != v || v == 1.0 / 0.0 || v == -1.0 / 0.0)
            throw std::invalid_argument("Rational: non-finite double");
        bool neg = v < 0;
        if (neg) v = -v;
        if (v >= 9.0e18) throw std::invalid_argument("Rational: double too large");
        int exp = 0;
        // scale mantissa to an integer
        while (v != 0.0 && v != static_cast<double>(static_cast<std::int64_t>(v))) {
            v *= 2.0;
            ++exp;
        }
        BigInt n(static_cast<std::int64_t>(v));
        BigInt d(1);
        for (int i = 0; i < exp; ++i) d = d * BigInt(2);
        if (neg) n = -n;
        return Rational(std::move(n), std::move(d));
    }

private:
    struct tag {};
    Rational(BigInt n, BigInt d, tag) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.negative()) { num_ = -num_; den_ = -den_; }
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) { num_ = num_ / g; den_ = den_ / g; }
    }

    BigInt num_;
    BigInt den_;
};

} // namespace gon
