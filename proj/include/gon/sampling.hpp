#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gon/lattice.hpp"
#include "gon/measure.hpp"
#include "gon/parallel.hpp"
#include "gon/reduction.hpp"
#include "gon/rng.hpp"
#include "gon/stability.hpp"

namespace gon {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}
inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// deterministic Miller-Rabin for 64-bit inputs
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline std::uint64_t next_prime_at_least(std::uint64_t n) {
    while (!is_prime_u64(n)) ++n;
    return n;
}

} // namespace detail

// Exact sampler of a random unimodular 2D lattice: shape parameter tau = x+iy
// drawn from the classical fundamental domain with density proportional to
// 1/y^2 (rejection from x uniform, y = (sqrt(3)/2)/u), plus a uniform rotation.
inline Lattice sample_lattice_2d(Rng& rng) {
    double x, y;
    while (true) {
        x = rng.uniform(-0.5, 0.5);
        double u = rng.next_double();
        if (u == 0.0) continue;
        y = (std::sqrt(3.0) / 2.0) / u;
        if (x * x + y * y >= 1.0) break;
    }
    double s = 1.0 / std::sqrt(y);
    Mat rows = {{s, 0.0}, {x * s, y * s}};
    double th = rng.uniform(0.0, 6.283185307179586476925286766559);
    double c = std::cos(th), sn = std::sin(th);
    for (auto& r : rows) {
        double a = r[0] * c - r[1] * sn;
        double b = r[0] * sn + r[1] * c;
        r = {a, b};
    }
    return Lattice::from_rows(std::move(rows));
}

// Approximate sampler for n >= 3: large-prime construction (p e_1 plus random
// residue columns), normalized to determinant one and basis-reduced. The
// prime_choice index selects among fixed primes >= 1e7 for sampler-artifact
// diagnostics.
inline Lattice sample_lattice_nd(std::size_t n, Rng& rng, int prime_choice = 0) {
    std::uint64_t base = 10000000ull + 1000ull * static_cast<std::uint64_t>(prime_choice);
    std::uint64_t p = detail::next_prime_at_least(base);
    Mat rows(n, Vec(n, 0.0));
    rows[0][0] = static_cast<double>(p);
    for (std::size_t i = 1; i < n; ++i) {
        rows[i][0] = static_cast<double>(rng.next_below(p));
        rows[i][i] = 1.0;
    }
    double scale = std::pow(static_cast<double>(p), -1.0 / static_cast<double>(n));
    for (auto& r : rows)
        for (auto& v : r) v *= scale;
    Lattice x = Lattice::from_rows(std::move(rows));
    return lll_reduce(x);
}

struct SampledLattice {
    Lattice lattice;
    std::string sampler; // "exact2d" or "approx_nd"
};

inline SampledLattice sample_lattice(std::size_t n, Rng& rng, int prime_choice = 0) {
    if (n < 2) throw ValidationError("sample_lattice: n must be >= 2");
    if (n == 2) return {sample_lattice_2d(rng), "exact2d"};
    return {sample_lattice_nd(n, rng, prime_choice), "approx_nd"};
}

struct StableFractionReport {
    std::size_t dim = 0;
    std::uint64_t samples = 0;
    std::uint64_t stable_count = 0;
    double fraction = 0.0;
    double ci95_lo = 0.0, ci95_hi = 0.0;
    std::string sampler;
    std::uint64_t seed = 0;
};

inline StableFractionReport estimate_stable_fraction(std::size_t n, std::uint64_t samples,
                                                     std::uint64_t seed) {
    if (samples == 0) throw ValidationError("estimate_stable_fraction: samples must be > 0");
    detail::check_alpha_dim(n);
    StableFractionReport rep;
    rep.dim = n;
    rep.samples = samples;
    rep.seed = seed;
    rep.sampler = n == 2 ? "exact2d" : "approx_nd";
    // fixed-size batches with per-batch counter streams: the aggregate is
    // independent of how many workers run them
    const std::uint64_t batch = 256;
    std::size_t batches = static_cast<std::size_t>((samples + batch - 1) / batch);
    std::vector<std::uint64_t> counts(batches, 0);
    Rng master(seed, 0x5f5f + n);
    run_batches(batches, [&](std::size_t b) {
        Rng rng = master.child(b);
        std::uint64_t lo = static_cast<std::uint64_t>(b) * batch;
        std::uint64_t hi = std::min(samples, lo + batch);
        std::uint64_t c = 0;
        for (std::uint64_t i = lo; i < hi; ++i)
            if (alpha(sample_lattice(n, rng).lattice).stable) ++c;
        counts[b] = c;
    });
    for (std::uint64_t c : counts) rep.stable_count += c;
    rep.fraction = static_cast<double>(rep.stable_count) / static_cast<double>(samples);
    double se = std::sqrt(std::max(rep.fraction * (1.0 - rep.fraction), 1e-12) /
                          static_cast<double>(samples));
    rep.ci95_lo = std::max(0.0, rep.fraction - 1.96 * se);
    rep.ci95_hi = std::min(1.0, rep.fraction + 1.96 * se);
    return rep;
}

// Number of primitive lattice vectors of norm < t, both signs counted (the
// tensor set contains both sign choices, which is the convention that matches
// thunder_value).
inline std::uint64_t primitive_vector_count_below(const Lattice& x, double t) {
    Mat red = lll_rows(x.basis);
    std::uint64_t pairs = 0;
    for (const auto& cand : vectors_in_ball(red, t * t)) {
        if (!(std::sqrt(cand.norm_sq) < t)) continue;
        long long g = 0;
        for (long long v : cand.coeffs) {
            long long a = std::llabs(v);
            while (a) { long long r = g % a; g = a; a = r; }
        }
        if (g == 1) ++pairs;
    }
    return 2 * pairs;
}

struct SiegelCheckReport {
    double t = 0.0;
    std::uint64_t samples = 0;
    double mean_count = 0.0;
    double expected = 0.0; // thunder_value(2,1,t)
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

inline SiegelCheckReport siegel_check_2d(double t, std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw ValidationError("siegel_check_2d: samples must be > 0");
    Rng rng(seed, 0x51e6);
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Lattice x = sample_lattice_2d(rng);
        auto c = static_cast<double>(primitive_vector_count_below(x, t));
        sum += c;
        sum_sq += c * c;
    }
    SiegelCheckReport rep;
    rep.t = t;
    rep.samples = samples;
    rep.seed = seed;
    rep.mean_count = sum / static_cast<double>(samples);
    double var = sum_sq / static_cast<double>(samples) - rep.mean_count * rep.mean_count;
    rep.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
    rep.expected = thunder_value(2, 1, t);
    return rep;
}

struct ThresholdFractionReport {
    std::size_t dim = 0;
    std::size_t k = 0;
    double t = 0.0;
    std::uint64_t samples = 0;
    double fraction = 0.0;       // fraction with alpha_k >= t
    double complement = 0.0;     // 1 - fraction
    double bound = 0.0;          // thunder_value(n,k,t)
    double std_error = 0.0;      // binomial SE of the complement
    std::string sampler;
    std::uint64_t seed = 0;
};

inline ThresholdFractionReport threshold_fraction(std::size_t n, std::size_t k, double t,
                                                  std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw ValidationError("threshold_fraction: samples must be > 0");
    detail::check_alpha_dim(n);
    if (k < 1 || k > n) throw ValidationError("threshold_fraction: k out of range");
    ThresholdFractionReport rep;
    rep.dim = n;
    rep.k = k;
    rep.t = t;
    rep.samples = samples;
    rep.seed = seed;
    rep.sampler = n == 2 ? "exact2d" : "approx_nd";
    const std::uint64_t batch = 256;
    std::size_t batches = static_cast<std::size_t>((samples + batch - 1) / batch);
    std::vector<std::uint64_t> counts(batches, 0);
    Rng master(seed, 0x7e57 + 31 * n + k);
    run_batches(batches, [&](std::size_t b) {
        Rng rng = master.child(b);
        std::uint64_t lo = static_cast<std::uint64_t>(b) * batch;
        std::uint64_t hi = std::min(samples, lo + batch);
        std::uint64_t c = 0;
        for (std::uint64_t i = lo; i < hi; ++i)
            if (alpha_k(sample_lattice(n, rng).lattice, k).value >= t) ++c;
        counts[b] = c;
    });
    std::uint64_t hit = 0;
    for (std::uint64_t c : counts) hit += c;
    rep.fraction = static_cast<double>(hit) / static_cast<double>(samples);
    rep.complement = 1.0 - rep.fraction;
    rep.bound = thunder_value(static_cast<int>(n), static_cast<int>(k), t);
    rep.std_error = std::sqrt(
        std::max(rep.complement * (1.0 - rep.complement), 1e-12) /
        static_cast<double>(samples));
    return rep;
}

// Quadrature oracle for the 2D stable fraction: integrates the stability
// indicator over the fundamental domain with the invariant density 1/y^2.
// The stability boundary in y is located with the stability module itself, so
// this is an independent route to the same number as the Monte Carlo
// estimate.
inline double stable_fraction_2d_quadrature(int x_steps = 64) {
    auto lattice_at = [](double x, double y) {
        double s = 1.0 / std::sqrt(y);
        return Lattice::from_rows({{s, 0.0}, {x * s, y * s}});
    };
    auto stable_at = [&](double x, double y) { return alpha(lattice_at(x, y)).stable; };
    double total = 0.0;   // integral of dx dy / y^2 over the fundamental domain
    double stable = 0.0;  // same integral over the stable part
    for (int i = 0; i < x_steps; ++i) {
        double x = -0.5 + (i + 0.5) / static_cast<double>(x_steps);
        double dx = 1.0 / static_cast<double>(x_steps);
        double ymin = std::sqrt(std::max(1.0 - x * x, 0.0));
        total += dx / ymin;
        // stability is monotone in y (larger y stretches the short vector);
        // bisect the boundary location
        double lo = ymin, hi = 4.0;
        if (!stable_at(x, lo)) {
            continue; // nothing stable on this slice
        }
        if (stable_at(x, hi)) {
            stable += dx / ymin; // whole slice stable (cannot happen; guard)
            continue;
        }
        for (int step = 0; step < 50; ++step) {
            double mid = 0.5 * (lo + hi);
            if (stable_at(x, mid)) lo = mid;
            else hi = mid;
        }
        stable += dx * (1.0 / ymin - 1.0 / lo);
    }
    return stable / total;
}

} // namespace gon
