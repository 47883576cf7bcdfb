#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gon/special.hpp"

namespace gon {

// log R(j) with R(j) = j^2 V_j / zeta(j)
inline double log_rankin_r(int j) {
    if (j < 1) throw std::invalid_argument("log_rankin_r: j must be >= 1");
    return 2.0 * std::log(static_cast<double>(j)) + log_ball_volume(j) - std::log(zeta(j));
}

// B(n,k) = prod_{j<=n} R(j) / (prod_{j<=k} R(j) * prod_{j<=n-k} R(j)), in log
// space via prefix sums so the k <-> n-k symmetry is bit-identical.
inline double log_rankin_b(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw std::invalid_argument("rankin_b: need 1 <= k <= n-1");
    static thread_local std::vector<double> prefix{0.0}; // prefix[m] = sum_{j<=m} log R(j)
    while (static_cast<int>(prefix.size()) <= n)
        prefix.push_back(prefix.back() + log_rankin_r(static_cast<int>(prefix.size())));
    return prefix[n] - (prefix[k] + prefix[n - k]);
}

inline double rankin_b(int n, int k) { return std::exp(log_rankin_b(n, k)); }

// expected count of primitive rank-k subgroup tensors of norm < t (Thunder)
inline double thunder_value(int n, int k, double t) {
    if (!(t > 0.0)) {
        if (t == 0.0) return 0.0;
        throw std::invalid_argument("thunder_value: t must be >= 0");
    }
    return std::exp(log_rankin_b(n, k) + n * std::log(t) - std::log(static_cast<double>(n)));
}

// t(n,k) = (n/C1)^{k(n-k)/(2n)}
inline double t_threshold(int n, int k, double c1) {
    if (!(c1 > 0.0)) throw std::invalid_argument("t_threshold: C1 must be positive");
    double e = static_cast<double>(k) * static_cast<double>(n - k) / (2.0 * n);
    return std::pow(static_cast<double>(n) / c1, e);
}

// max over the grid of B(n,k)^{2/(k(n-k))} * n / C; a report <= 1 certifies
// the growth inequality with that C over the range.
struct RankinGrowthReport {
    double max_ratio = 0.0;
    int argmax_n = 0;
    int argmax_k = 0;
    double c = 0.0;
    int n_lo = 0, n_hi = 0;
};

inline double rankin_growth_ratio(int n, int k, double c) {
    double e = 2.0 / (static_cast<double>(k) * static_cast<double>(n - k));
    return std::exp(e * log_rankin_b(n, k)) * static_cast<double>(n) / c;
}

inline RankinGrowthReport rankin_growth_check(int n_lo, int n_hi, double c) {
    if (n_lo < 2 || n_hi < n_lo) throw std::invalid_argument("rankin_growth_check: bad range");
    if (!(c > 0.0)) throw std::invalid_argument("rankin_growth_check: C must be positive");
    RankinGrowthReport rep;
    rep.c = c;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            double r = rankin_growth_ratio(n, k, c);
            if (r > rep.max_ratio) {
                rep.max_ratio = r;
                rep.argmax_n = n;
                rep.argmax_k = k;
            }
        }
    return rep;
}

} // namespace gon
