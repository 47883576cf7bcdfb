#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gon/linalg.hpp"

namespace gon {

// Hard cap for exact enumeration; higher dimensions are rejected rather than
// silently falling back to heuristics.
inline constexpr std::size_t kEnumDimCap = 12;

struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Coeffs = std::vector<long long>;

inline double shortest_basis_norm_sq(const GramSchmidt& g) {
    double b0 = 1e300;
    for (std::size_t i = 0; i < g.ortho.size(); ++i) {
        double len = 0.0;
        for (std::size_t j = 0; j <= i; ++j)
            len += g.mu[i][j] * g.mu[i][j] * g.lengths_sq[j];
        b0 = std::min(b0, len);
    }
    return b0;
}

// Fincke-Pohst style enumeration over the Gram-Schmidt triangularization.
// Visits every coefficient vector c != 0 with ||sum c_i b_i - t||^2 <= radius_sq,
// where t is given by its projection coefficients alpha (alpha_k = <t,u_k>/||u_k||^2).
// For t = 0 only one representative of each +-pair is visited (trailing
// nonzero coefficient positive). The callback returns the radius to continue
// with, which lets searches shrink the tree as better candidates appear.
class Enumerator {
public:
    explicit Enumerator(const Mat& basis)
        : gs_(gram_schmidt(basis)), m_(basis.size()) {
        if (m_ > kEnumDimCap)
            throw CapExceededError("enumeration supports rank <= " + std::to_string(kEnumDimCap));
    }

    const GramSchmidt& gso() const { return gs_; }

    void run(double radius_sq, const Vec* alpha,
             const std::function<double(const Coeffs&, double)>& visit) const {
        Coeffs c(m_, 0);
        // small inflation so boundary vectors survive rounding
        double r2 = radius_sq * (1.0 + 1e-12) + 1e-300;
        recurse(m_, 0.0, c, alpha, r2, visit);
    }

private:
    GramSchmidt gs_;
    std::size_t m_;

    void recurse(std::size_t level, double partial, Coeffs& c,
                 const Vec* alpha, double& r2,
                 const std::function<double(const Coeffs&, double)>& visit) const {
        if (level == 0) {
            bool zero = std::all_of(c.begin(), c.end(), [](long long v) { return v == 0; });
            if (!zero || alpha) {
                double nr = visit(c, partial);
                double cap = nr * (1.0 + 1e-12) + 1e-300;
                if (cap < r2) r2 = cap;
            }
            return;
        }
        std::size_t k = level - 1;
        double proj = 0.0;
        for (std::size_t i = level; i < m_; ++i) proj += static_cast<double>(c[i]) * gs_.mu[i][k];
        if (alpha) proj -= (*alpha)[k];
        double budget = r2 - partial;
        if (budget < 0.0) return;
        double half = std::sqrt(budget / gs_.lengths_sq[k]);
        long long lo = static_cast<long long>(std::ceil(-proj - half - 1e-12));
        long long hi = static_cast<long long>(std::floor(-proj + half + 1e-12));
        bool higher_zero = true;
        for (std::size_t i = level; i < m_; ++i) higher_zero = higher_zero && c[i] == 0;
        if (!alpha && higher_zero && lo < 0) lo = 0; // half-space: one of each +-pair
        for (long long v = lo; v <= hi; ++v) {
            double y = static_cast<double>(v) + proj;
            double p2 = partial + y * y * gs_.lengths_sq[k];
            if (p2 > r2) continue;
            c[k] = v;
            recurse(k, p2, c, alpha, r2, visit);
        }
        c[k] = 0;
    }
};

struct EnumResult {
    Coeffs coeffs;
    Vec vector;
    double norm_sq = 0.0;
};

inline Vec coeffs_to_vector(const Coeffs& c, const Mat& basis) {
    Vec v(basis.empty() ? 0 : basis[0].size(), 0.0);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (c[i] != 0) axpy(v, static_cast<double>(c[i]), basis[i]);
    return v;
}

inline bool lex_less(const Coeffs& a, const Coeffs& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Canonical sign: first nonzero coefficient positive (deterministic witnesses).
inline Coeffs canonical_sign(Coeffs c) {
    for (long long v : c) {
        if (v > 0) break;
        if (v < 0) {
            for (auto& x : c) x = -x;
            break;
        }
    }
    return c;
}

// Shortest nonzero vector; ties broken by lexicographically smallest
// canonical coefficient vector.
inline EnumResult shortest_vector_enum(const Mat& basis) {
    Enumerator en(basis);
    EnumResult res;
    res.norm_sq = 1e300;
    en.run(shortest_basis_norm_sq(en.gso()), nullptr, [&](const Coeffs& c, double nsq) {
        Coeffs cc = canonical_sign(c);
        bool better = nsq < res.norm_sq * (1.0 - 1e-12);
        bool tie = !better && nsq <= res.norm_sq * (1.0 + 1e-12);
        if (better || (tie && (res.coeffs.empty() || lex_less(cc, res.coeffs)))) {
            res.coeffs = std::move(cc);
            res.norm_sq = std::min(nsq, res.norm_sq);
        }
        return res.norm_sq;
    });
    res.vector = coeffs_to_vector(res.coeffs, basis);
    res.norm_sq = norm_sq(res.vector);
    return res;
}

// Closest lattice vector to target (distance measured in ambient space; any
// component of the target off span(basis) contributes a constant offset).
inline EnumResult closest_vector_enum(const Mat& basis, const Vec& target) {
    Enumerator en(basis);
    const auto& g = en.gso();
    std::size_t m = basis.size();
    Vec alpha(m);
    for (std::size_t k = 0; k < m; ++k)
        alpha[k] = dot(target, g.ortho[k]) / g.lengths_sq[k];
    Coeffs babai(m, 0);
    for (std::size_t k = m; k-- > 0;) {
        double proj = 0.0;
        for (std::size_t i = k + 1; i < m; ++i) proj += static_cast<double>(babai[i]) * g.mu[i][k];
        babai[k] = llround(alpha[k] - proj);
    }
    Vec off = target;
    for (std::size_t k = 0; k < m; ++k) axpy(off, -alpha[k], g.ortho[k]);
    double off_sq = norm_sq(off);

    EnumResult res;
    res.coeffs = babai;
    res.norm_sq = norm_sq(sub(coeffs_to_vector(babai, basis), target));
    en.run(std::max(res.norm_sq - off_sq, 0.0), &alpha, [&](const Coeffs& c, double dsq) {
        double total = dsq + off_sq;
        bool better = total < res.norm_sq * (1.0 - 1e-12);
        bool tie = !better && total <= res.norm_sq * (1.0 + 1e-12);
        if (better || (tie && lex_less(c, res.coeffs))) {
            res.coeffs = c;
            res.norm_sq = std::min(total, res.norm_sq);
        }
        return std::max(res.norm_sq - off_sq, 0.0);
    });
    res.vector = coeffs_to_vector(res.coeffs, basis);
    res.norm_sq = norm_sq(sub(res.vector, target));
    return res;
}

// All +-pair representatives with norm^2 <= radius_sq (nonzero), sorted by
// (norm, coefficients).
inline std::vector<EnumResult> vectors_in_ball(const Mat& basis, double radius_sq) {
    Enumerator en(basis);
    std::vector<EnumResult> out;
    en.run(radius_sq, nullptr, [&](const Coeffs& c, double nsq) {
        if (nsq <= radius_sq * (1.0 + 1e-12)) {
            EnumResult r;
            r.coeffs = canonical_sign(c);
            r.norm_sq = nsq;
            out.push_back(std::move(r));
        }
        return radius_sq;
    });
    for (auto& r : out) {
        r.vector = coeffs_to_vector(r.coeffs, basis);
        r.norm_sq = norm_sq(r.vector);
    }
    std::sort(out.begin(), out.end(), [](const EnumResult& a, const EnumResult& b) {
        if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
        return lex_less(a.coeffs, b.coeffs);
    });
    return out;
}

} // namespace gon
