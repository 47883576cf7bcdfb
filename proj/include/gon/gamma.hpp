#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "gon/special.hpp"

namespace gon {

// Upper bounds gamma_d >= sup over unimodular rank-d lattices of the shortest
// vector length (so gamma_d^2 is the classical Hermite constant). Exact values
// are known for d <= 8; beyond that the Minkowski convex-body bound
// 2 * V_d^{-1/d} applies. Any upper bound is admissible where these are
// consumed, it just weakens the derived covering-radius bounds.
enum class GammaProvenance { known_exact, minkowski_fallback };

struct GammaEntry {
    double value = 0.0;
    GammaProvenance provenance = GammaProvenance::minkowski_fallback;
    // For exact entries, gamma_d^(2d) is rational; keeping it exact lets
    // boundary cases of the covering check evaluate without rounding fuzz.
    bool has_exact_power = false;
    std::int64_t pow2d_num = 0;
    std::int64_t pow2d_den = 1;
};

class GammaTable {
public:
    static GammaTable exact_defaults() {
        GammaTable t;
        // gamma_d^(2d) for d = 1..8 (classical Hermite constants to the d-th power)
        static const std::int64_t num[8] = {1, 4, 2, 4, 8, 64, 64, 256};
        static const std::int64_t den[8] = {1, 3, 1, 1, 1, 3, 1, 1};
        for (int d = 1; d <= 8; ++d) {
            GammaEntry e;
            e.provenance = GammaProvenance::known_exact;
            e.has_exact_power = true;
            e.pow2d_num = num[d - 1];
            e.pow2d_den = den[d - 1];
            e.value = std::pow(static_cast<double>(num[d - 1]) / static_cast<double>(den[d - 1]),
                               1.0 / (2.0 * d));
            t.entries_[d] = e;
        }
        return t;
    }

    static double minkowski_bound(int d) {
        return 2.0 * std::pow(ball_volume(d), -1.0 / static_cast<double>(d));
    }

    // Overrides from a user table of exact upper bounds (values, keyed by dim).
    void set_exact(int d, double value) {
        GammaEntry e;
        e.value = value;
        e.provenance = GammaProvenance::known_exact;
        // re-attach the exact rational power when the value matches a default
        GammaTable def = exact_defaults();
        auto it = def.entries_.find(d);
        if (it != def.entries_.end() &&
            std::fabs(it->second.value - value) <= 1e-9 * it->second.value) {
            e = it->second;
        }
        entries_[d] = e;
    }

    GammaEntry get(int d) const {
        if (d < 1) throw std::invalid_argument("gamma: dimension must be >= 1");
        auto it = entries_.find(d);
        if (it != entries_.end()) return it->second;
        GammaEntry e;
        e.value = minkowski_bound(d);
        e.provenance = GammaProvenance::minkowski_fallback;
        return e;
    }

    double value(int d) const { return get(d).value; }

    std::string provenance_string() const {
        std::string s;
        for (const auto& [d, e] : entries_) {
            if (!s.empty()) s += ",";
            s += std::to_string(d) + ":" +
                 (e.provenance == GammaProvenance::known_exact ? "exact" : "minkowski");
        }
        return s.empty() ? "minkowski-only" : s;
    }

    const std::map<int, GammaEntry>& entries() const { return entries_; }
    void clear() { entries_.clear(); }

private:
    std::map<int, GammaEntry> entries_;
};

} // namespace gon
