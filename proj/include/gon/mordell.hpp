#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "gon/lattice.hpp"
#include "gon/reduction.hpp"
#include "gon/rng.hpp"

namespace gon {

struct SymmetricBox {
    Vec half_widths;
    double volume() const {
        double v = 1.0;
        for (double a : half_widths) v *= 2.0 * a;
        return v;
    }
    double normalized_volume() const { // volume / 2^n
        double v = 1.0;
        for (double a : half_widths) v *= a;
        return v;
    }
};

// True iff the open box (-a_1,a_1) x ... x (-a_n,a_n) contains no nonzero
// lattice point. Decided by exact enumeration: any point interior to the box
// lies in the Euclidean ball of radius sqrt(sum a_i^2).
inline bool is_admissible(const Lattice& x, const SymmetricBox& box) {
    if (box.half_widths.size() != x.dim)
        throw ValidationError("is_admissible: box dimension mismatch");
    for (double a : box.half_widths)
        if (!(a > 0.0)) throw ValidationError("is_admissible: half widths must be positive");
    double r2 = 0.0;
    for (double a : box.half_widths) r2 += a * a;
    Mat red = lll_rows(x.basis);
    for (const auto& cand : vectors_in_ball(red, r2)) {
        bool interior = true;
        for (std::size_t i = 0; i < x.dim && interior; ++i)
            interior = std::fabs(cand.vector[i]) < box.half_widths[i];
        if (interior) return false;
    }
    return true;
}

struct KappaEstimate {
    double value = 0.0;
    SymmetricBox box;
    std::uint64_t budget_used = 0;
};

namespace detail {

// Largest admissible half-width for coordinate i given the others, capped at
// `cap`; this is the smallest |v_i| over nonzero points interior in the other
// coordinates (exact enumeration), so setting a_i to it keeps the box open.
inline double max_halfwidth(const Mat& red, const Vec& widths, std::size_t i, double cap) {
    double r2 = cap * cap;
    for (std::size_t j = 0; j < widths.size(); ++j)
        if (j != i) r2 += widths[j] * widths[j];
    double best = cap;
    for (const auto& cand : vectors_in_ball(red, r2)) {
        bool others_inside = true;
        for (std::size_t j = 0; j < widths.size() && others_inside; ++j)
            if (j != i) others_inside = std::fabs(cand.vector[j]) < widths[j];
        if (!others_inside) continue;
        double vi = std::fabs(cand.vector[i]);
        if (vi > 0.0) best = std::min(best, vi);
        else return 0.0; // a point already interior in the other coordinates
    }
    return best;
}

// greedy round-robin expansion with per-step growth caps
inline std::uint64_t expand_box(const Mat& red, Vec& widths, std::uint64_t budget) {
    std::uint64_t used = 0;
    std::size_t n = widths.size();
    for (int round = 0; round < 8 && used < budget; ++round) {
        bool grew = false;
        for (std::size_t i = 0; i < n && used < budget; ++i) {
            double cap = std::max(widths[i] * 4.0, 1.0);
            double t = max_halfwidth(red, widths, i, cap);
            ++used;
            if (t > widths[i] * (1.0 + 1e-12)) {
                widths[i] = t;
                grew = true;
            }
        }
        if (!grew) break;
    }
    return used;
}

// detects an exact coordinate split of the basis (lower block-triangular with
// a zero upper-right block after the first k coordinates)
inline std::optional<std::size_t> split_point(const Mat& basis) {
    std::size_t n = basis.size();
    for (std::size_t k = 1; k < n; ++k) {
        bool zero = true;
        // rows whose support lies in the first k coordinates must number k
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            bool in_first = true;
            for (std::size_t j = k; j < n; ++j) in_first = in_first && basis[i][j] == 0.0;
            if (in_first) ++count;
        }
        zero = count == k;
        if (zero) return k;
    }
    return std::nullopt;
}

} // namespace detail

inline KappaEstimate kappa_lower_estimate(const Lattice& x, std::uint64_t budget,
                                          std::uint64_t seed);

namespace detail {

inline Vec product_start(const Lattice& x, std::uint64_t budget, std::uint64_t seed) {
    auto split = split_point(x.basis);
    if (!split) return {};
    std::size_t k = *split, n = x.dim;
    // sub-blocks: rows supported on the first k coordinates form the first
    // block; the projection drops to the remaining coordinates
    Mat first_rows, rest_rows;
    for (std::size_t i = 0; i < n; ++i) {
        bool in_first = true;
        for (std::size_t j = k; j < n; ++j) in_first = in_first && x.basis[i][j] == 0.0;
        if (in_first && first_rows.size() < k) {
            first_rows.push_back(Vec(x.basis[i].begin(),
                                     x.basis[i].begin() + static_cast<std::ptrdiff_t>(k)));
        } else {
            rest_rows.push_back(Vec(x.basis[i].begin() + static_cast<std::ptrdiff_t>(k),
                                    x.basis[i].end()));
        }
    }
    if (first_rows.size() != k || rest_rows.size() != n - k) return {};
    try {
        Lattice b1 = Lattice::from_rows(first_rows);
        Lattice b2 = Lattice::from_rows(rest_rows);
        KappaEstimate e1 = kappa_lower_estimate(b1, budget / 2 + 32, seed + 1);
        KappaEstimate e2 = kappa_lower_estimate(b2, budget / 2 + 32, seed + 2);
        Vec widths = e1.box.half_widths;
        widths.insert(widths.end(), e2.box.half_widths.begin(), e2.box.half_widths.end());
        return widths;
    } catch (const std::exception&) {
        return {};
    }
}

} // namespace detail

// Certified lower estimate of the Mordell constant: every reported value is
// witnessed by a verified admissible box. Search: inscribed cube of the
// shortest-vector ball, a product start when the basis splits along
// coordinates, seeded multi-starts in log-width space, greedy round-robin
// expansion, and volume-improving coordinate exchanges.
inline KappaEstimate kappa_lower_estimate(const Lattice& x, std::uint64_t budget,
                                          std::uint64_t seed) {
    std::size_t n = x.dim;
    Mat red = lll_rows(x.basis);
    double lambda1 = shortest_vector(x).length;
    double s = lambda1 / std::sqrt(static_cast<double>(n));

    KappaEstimate best;
    std::uint64_t used = 0;
    auto consider = [&](Vec widths) {
        SymmetricBox b{widths};
        double v = b.normalized_volume();
        if (v > best.value && is_admissible(x, b)) {
            best.value = v;
            best.box = b;
        }
        ++used;
    };

    // start 1: cube inscribed in the shortest-vector ball (admissible by
    // construction, so the estimate is never below (lambda1/sqrt(n))^n)
    Vec cube(n, s);
    consider(cube);
    {
        Vec w = cube;
        used += detail::expand_box(red, w, budget > used ? budget - used : 0);
        consider(w);
    }

    // deterministic axis-priority starts: stretch one axis to its maximum
    // first, then round-robin; seed-independent, so repeated runs on the same
    // block reproduce the same boxes
    for (std::size_t lead = 0; lead < n && used + n < budget; ++lead) {
        Vec w = cube;
        w[lead] = detail::max_halfwidth(red, w, lead, std::max(8.0, 8.0 * s));
        ++used;
        used += detail::expand_box(red, w, budget > used ? budget - used : 0);
        consider(w);
        // shrink the lead axis in steps and regrow the rest, keeping the best
        for (int step = 0; step < 6 && used + n < budget; ++step) {
            w[lead] *= 0.75;
            if (w[lead] < 0.05 * s) break;
            Vec t = w;
            used += detail::expand_box(red, t, budget > used ? budget - used : 0);
            consider(t);
        }
    }

    // start 2: product box along an exact coordinate split, when present
    {
        Vec w = detail::product_start(x, budget, seed);
        if (w.size() == n) {
            consider(w);
            used += detail::expand_box(red, w, budget > used ? budget - used : 0);
            consider(w);
        }
    }

    // seeded multi-starts with coordinate exchanges
    Rng rng(seed, 0xb0c5);
    int max_starts = 6;
    for (int start = 0; start < max_starts && used + n < budget; ++start) {
        Vec w(n);
        for (std::size_t i = 0; i < n; ++i)
            w[i] = s * std::exp(rng.uniform(-0.7, 0.7));
        // shrink until admissible
        SymmetricBox probe{w};
        int shrink_guard = 0;
        while (!is_admissible(x, probe) && shrink_guard++ < 60) {
            for (auto& a : probe.half_widths) a *= 0.8;
            ++used;
        }
        w = probe.half_widths;
        used += detail::expand_box(red, w, budget > used ? budget - used : 0);
        consider(w);
        // coordinate exchanges: shrink i, regrow j
        for (int ex = 0; ex < 4 && used + 2 < budget; ++ex) {
            std::size_t i = static_cast<std::size_t>(rng.next_below(n));
            std::size_t j = static_cast<std::size_t>(rng.next_below(n));
            if (i == j) continue;
            Vec t = w;
            t[i] *= rng.uniform(0.6, 0.9);
            double cap = std::max(t[j] * 8.0, 1.0);
            t[j] = detail::max_halfwidth(red, t, j, cap);
            ++used;
            double vol_new = 1.0, vol_old = 1.0;
            for (std::size_t q = 0; q < n; ++q) { vol_new *= t[q]; vol_old *= w[q]; }
            if (vol_new > vol_old) {
                w = t;
                consider(w);
            }
        }
    }

    if (best.value <= 0.0) { // inscribed cube must have succeeded; guard anyway
        best.box = SymmetricBox{cube};
        best.value = best.box.normalized_volume();
    }
    best.budget_used = used;
    return best;
}

// Closed-form lower bounds for kappa_n plus Hadamard-determinant data.
struct KappaBounds {
    double general = 0.0;         // n^{-n/2}
    double unbounded_orbit = 0.0; // (n-1)^{-(n-1)/2}
    std::optional<double> mod4_1; // 1/(sqrt(2n-1)*(n-1)^{(n-1)/2}) when n = 1 mod 4, n >= 5
    double hadamard = 0.0;        // upper bound on h_n
};

inline KappaBounds kappa_n_bounds(int n) {
    if (n < 2) throw ValidationError("kappa_n_bounds: n must be >= 2");
    KappaBounds b;
    double nd = static_cast<double>(n);
    b.general = std::pow(nd, -0.5 * nd);
    b.unbounded_orbit = std::pow(nd - 1.0, -0.5 * (nd - 1.0));
    double barba = std::sqrt(2.0 * nd - 1.0) * std::pow(nd - 1.0, 0.5 * (nd - 1.0));
    b.hadamard = std::pow(nd, 0.5 * nd);
    if (n % 4 == 1 && n >= 5) {
        b.mod4_1 = 1.0 / barba;
        b.hadamard = std::min(b.hadamard, barba);
    }
    return b;
}

} // namespace gon
