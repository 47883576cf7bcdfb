#pragma once

#include <cstdint>
#include <cmath>

namespace gon {

// Counter-based generator: output i of stream (seed, stream_id) is a pure
// function of (seed, stream_id, i), so batch workers can draw from disjoint
// streams and the aggregate result does not depend on scheduling.
// Identifier reported in outputs: "splitmix64-ctr/v1".
inline constexpr const char* kRngId = "splitmix64-ctr/v1";

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix64(seed ^ mix64(stream * 0x9e3779b97f4a7c15ULL + 1))), ctr_(0) {}

    std::uint64_t next_u64() { return mix64(key_ ^ mix64(++ctr_)); }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        // rejection to avoid modulo bias
        std::uint64_t lim = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t v;
        do { v = next_u64(); } while (v >= lim);
        return v % n;
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double next_gaussian() {
        // Box-Muller; one value per call keeps the stream layout simple.
        double u1 = 0.0;
        while (u1 == 0.0) u1 = next_double();
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // deterministic child stream (for batch workers)
    Rng child(std::uint64_t idx) const { return Rng(key_, idx + 0x51ed2701ULL); }

private:
    std::uint64_t key_;
    std::uint64_t ctr_;
};

} // namespace gon
