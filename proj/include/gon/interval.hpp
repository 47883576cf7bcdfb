#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "gon/rational.hpp"

namespace gon {

// Outward-rounded interval arithmetic on doubles. Elementary operations round
// the result outward by one ulp per side; exp widens by two ulps to cover the
// libm error budget. Endpoints hit exactly (like exp(0) = 1) stay exact, which
// the covering check relies on at boundary-equality corners.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    static Interval exact(double v) { return {v, v}; }
    static Interval bounds(double l, double h) { return {l, h}; }

    bool degenerate() const { return lo == hi; }
};

namespace iv {

inline double down(double v) {
    return std::nextafter(v, -std::numeric_limits<double>::infinity());
}
inline double up(double v) {
    return std::nextafter(v, std::numeric_limits<double>::infinity());
}

// error-free transformations: widen only when the IEEE result is inexact, so
// exactly representable arithmetic (the boundary-equality cases) stays exact
inline double add_down(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return err < 0.0 ? down(s) : s;
}
inline double add_up(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return err > 0.0 ? up(s) : s;
}
inline double mul_down(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return err < 0.0 ? down(p) : p;
}
inline double mul_up(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return err > 0.0 ? up(p) : p;
}

inline Interval add(Interval a, Interval b) {
    return {add_down(a.lo, b.lo), add_up(a.hi, b.hi)};
}

inline Interval neg(Interval a) { return {-a.hi, -a.lo}; }

inline Interval sub(Interval a, Interval b) { return add(a, neg(b)); }

inline Interval mul_scalar(Interval a, double s) {
    if (s == 0.0) return Interval::exact(0.0);
    if (s > 0.0) return {mul_down(a.lo, s), mul_up(a.hi, s)};
    return {mul_down(a.hi, s), mul_up(a.lo, s)};
}

inline Interval mul(Interval a, Interval b) {
    double lo = std::min(std::min(mul_down(a.lo, b.lo), mul_down(a.lo, b.hi)),
                         std::min(mul_down(a.hi, b.lo), mul_down(a.hi, b.hi)));
    double hi = std::max(std::max(mul_up(a.lo, b.lo), mul_up(a.lo, b.hi)),
                         std::max(mul_up(a.hi, b.lo), mul_up(a.hi, b.hi)));
    return {lo, hi};
}

inline Interval exp(Interval a) {
    double lo = (a.lo == 0.0) ? 1.0 : down(down(std::exp(a.lo)));
    double hi = (a.hi == 0.0) ? 1.0 : up(up(std::exp(a.hi)));
    return {lo, hi};
}

// enclosures of the logarithm constants used by the profile constraints
inline Interval log_4_3() {
    double v = std::log(4.0 / 3.0);
    return {down(down(down(v))), up(up(up(v)))};
}
inline Interval log_3_2() {
    double v = std::log(1.5);
    return {down(down(down(v))), up(up(up(v)))};
}

} // namespace iv

// Exact rational interval with the same surface, used by the certificate
// re-validation path. exp is a Taylor enclosure with an explicit remainder.
struct RatInterval {
    Rational lo;
    Rational hi;

    static RatInterval exact(const Rational& v) { return {v, v}; }
    static RatInterval from_double_bounds(double l, double h) {
        return {Rational::from_double(l), Rational::from_double(h)};
    }
};

namespace riv {

inline RatInterval add(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
inline RatInterval neg(const RatInterval& a) { return {-a.hi, -a.lo}; }
inline RatInterval sub(const RatInterval& a, const RatInterval& b) { return add(a, neg(b)); }
inline RatInterval mul_scalar(const RatInterval& a, const Rational& s) {
    if (s.sign() >= 0) return {a.lo * s, a.hi * s};
    return {a.hi * s, a.lo * s};
}
inline RatInterval mul(const RatInterval& a, const RatInterval& b) {
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Rational lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo) lo = c[i];
        if (hi < c[i]) hi = c[i];
    }
    return {lo, hi};
}

// exp(q) with rigorous two-sided Taylor remainder; requires |q| <= 24.
inline RatInterval exp_point(const Rational& q) {
    Rational absq = q.abs();
    if (Rational(24) < absq) throw std::invalid_argument("riv::exp_point: argument too large");
    const int K = 90;
    Rational term(1);
    Rational sum(1);
    for (int k = 1; k <= K; ++k) {
        term = term * q / Rational(k);
        sum += term;
    }
    // remainder bound: |q|^{K+1}/(K+1)! * 1/(1 - |q|/(K+2))
    Rational tail = absq;
    for (int k = 2; k <= K + 1; ++k) tail = tail * absq / Rational(k);
    tail = tail / (Rational(1) - absq / Rational(K + 2));
    if (tail.sign() < 0) throw std::logic_error("riv::exp_point: remainder bound failed");
    return {sum - tail, sum + tail};
}

inline RatInterval exp(const RatInterval& a) {
    RatInterval lo = exp_point(a.lo);
    RatInterval hi = exp_point(a.hi);
    if (a.lo.is_zero()) lo = RatInterval::exact(Rational(1));
    if (a.hi.is_zero()) hi = RatInterval::exact(Rational(1));
    return {lo.lo, hi.hi};
}

// ln((1+x)/(1-x)) = 2*atanh(x) for rational x in (0,1), with remainder bound
inline RatInterval atanh_twice(const Rational& x, int terms) {
    Rational sum(0);
    Rational p = x;
    for (int k = 1; k <= terms; k += 2) {
        sum += p / Rational(k);
        p = p * x * x;
    }
    // tail: 2 * sum_{k odd > terms} x^k/k <= 2 * x^{terms+2}/((terms+2)(1-x^2))
    Rational tail = p / (Rational(terms + 2) * (Rational(1) - x * x));
    return {Rational(2) * sum, Rational(2) * (sum + tail)};
}

inline RatInterval log_4_3() { return atanh_twice(Rational(1, 7), 31); }
inline RatInterval log_3_2() { return atanh_twice(Rational(1, 5), 31); }

} // namespace riv

} // namespace gon
