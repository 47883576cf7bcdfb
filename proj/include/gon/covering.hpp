#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "gon/gamma.hpp"
#include "gon/lattice.hpp"
#include "gon/reduction.hpp"

namespace gon {

inline constexpr std::size_t kCovradDimCap = 6;

struct CoveringRadius {
    double value = 0.0; // certified lower bound; true covrad <= value + tol
    Vec deep_hole;
    double tol = 0.0;
};

namespace detail {

class CvpSolver {
public:
    explicit CvpSolver(const Mat& reduced_rows)
        : rows_(reduced_rows), en_(reduced_rows) {}

    double distance(const Vec& target) const {
        return std::sqrt(cvp(target).norm_sq);
    }

    EnumResult cvp(const Vec& target) const {
        const auto& g = en_.gso();
        std::size_t m = rows_.size();
        Vec alpha(m);
        for (std::size_t k = 0; k < m; ++k)
            alpha[k] = dot(target, g.ortho[k]) / g.lengths_sq[k];
        Coeffs babai(m, 0);
        for (std::size_t k = m; k-- > 0;) {
            double proj = 0.0;
            for (std::size_t i = k + 1; i < m; ++i)
                proj += static_cast<double>(babai[i]) * g.mu[i][k];
            babai[k] = llround(alpha[k] - proj);
        }
        EnumResult res;
        res.coeffs = babai;
        res.norm_sq = norm_sq(sub(coeffs_to_vector(babai, rows_), target));
        en_.run(res.norm_sq, &alpha, [&](const Coeffs& c, double dsq) {
            if (dsq < res.norm_sq) {
                res.coeffs = c;
                res.norm_sq = dsq;
            }
            return res.norm_sq;
        });
        res.vector = coeffs_to_vector(res.coeffs, rows_);
        res.norm_sq = norm_sq(sub(res.vector, target));
        return res;
    }

private:
    Mat rows_;
    Enumerator en_;
};

} // namespace detail

// Certified covering radius by branch-and-bound over the fundamental
// parallelepiped: each sub-box is bounded above by center distance plus half
// diagonal and below by the center distance itself; the returned value is the
// best witness distance once the two-sided gap closes below tol.
inline CoveringRadius covering_radius(const Lattice& x, double tol) {
    if (x.dim > kCovradDimCap)
        throw CapExceededError("covering_radius is capped at dimension " +
                               std::to_string(kCovradDimCap));
    if (!(tol >= 1e-6))
        throw ValidationError("covering_radius: tol must be >= 1e-6");
    Mat red = lll_rows(x.basis);
    detail::CvpSolver solver(red);
    std::size_t n = x.dim;

    struct Box {
        Vec lo, hi;
        double upper;
    };
    auto center_point = [&](const Box& b) {
        Vec p(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            axpy(p, 0.5 * (b.lo[i] + b.hi[i]), red[i]);
        return p;
    };
    auto half_diag = [&](const Box& b) {
        // max over sign patterns of || sum +- (w_i/2) b_i ||
        double best = 0.0;
        std::size_t patterns = std::size_t(1) << (n - 1);
        for (std::size_t mask = 0; mask < patterns; ++mask) {
            Vec v(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                double s = (i + 1 < n && (mask >> i) & 1) ? -0.5 : 0.5;
                axpy(v, s * (b.hi[i] - b.lo[i]), red[i]);
            }
            best = std::max(best, norm_sq(v));
        }
        return std::sqrt(best);
    };

    auto cmp = [](const std::pair<double, std::size_t>& a,
                  const std::pair<double, std::size_t>& b) { return a.first < b.first; };
    std::priority_queue<std::pair<double, std::size_t>,
                        std::vector<std::pair<double, std::size_t>>, decltype(cmp)>
        queue(cmp);
    std::vector<Box> boxes;

    double lower = 0.0;
    Vec hole(n, 0.0);
    auto push_box = [&](Box b) {
        Vec p = center_point(b);
        double d = solver.distance(p);
        if (d > lower) {
            lower = d;
            hole = p;
        }
        b.upper = d + half_diag(b);
        boxes.push_back(std::move(b));
        queue.emplace(boxes.back().upper, boxes.size() - 1);
    };

    Box root{Vec(n, 0.0), Vec(n, 1.0), 0.0};
    push_box(root);

    std::size_t guard = 0;
    const std::size_t guard_max = 40000000;
    while (!queue.empty()) {
        auto [ub, idx] = queue.top();
        if (ub <= lower + tol) break;
        queue.pop();
        if (++guard > guard_max)
            throw std::runtime_error("covering_radius: branch-and-bound budget exhausted");
        Box b = boxes[idx];
        if (b.upper <= lower + tol) continue;
        // split the widest scaled direction
        std::size_t split = 0;
        double wbest = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            double w = (b.hi[i] - b.lo[i]) * norm(red[i]);
            if (w > wbest) { wbest = w; split = i; }
        }
        double mid = 0.5 * (b.lo[split] + b.hi[split]);
        Box l = b, r = b;
        l.hi[split] = mid;
        r.lo[split] = mid;
        push_box(std::move(l));
        push_box(std::move(r));
    }

    CoveringRadius out;
    out.value = lower;
    out.deep_hole = hole;
    out.tol = tol;
    return out;
}

// Which reading of the block admissibility test and bound denominators to use.
// `standard` raises the block coefficient to the block dimension and squares
// the gamma exponent (the internally consistent form); `alternate` keeps the
// first-power coefficient and single gamma exponent as sometimes displayed.
enum class BoundVariant { standard, alternate };

// Covering-radius bound for a lattice of covolume d in R^n from its first KZ
// coefficient: requires 2*A1^n >= d*gamma_{n+1}^{n+1} and then
// covrad^2 <= A1^2 - A1^{2n+2}/(d^2 * gamma_{n+1}^{2n+2}).
inline double woods_bound_value(double a1, double d, int n, double gamma_np1) {
    double num = std::pow(a1, 2 * n + 2);
    double den = d * d * std::pow(gamma_np1, 2 * n + 2);
    return a1 * a1 - num / den;
}

inline std::optional<double> woods_bound(double a1, double d, int n, double gamma_np1) {
    if (!(a1 > 0.0) || !(d > 0.0) || n < 1 || !(gamma_np1 > 0.0))
        throw ValidationError("woods_bound: inputs must be positive");
    double hyp_rhs = d * std::pow(gamma_np1, n + 1);
    if (2.0 * std::pow(a1, n) < hyp_rhs) return std::nullopt;
    return woods_bound_value(a1, d, n, gamma_np1);
}

// Splits profile coefficients into blocks given by `parts` and sums per-block
// bounds; nullopt when any block fails its admissibility test.
inline std::optional<double> composition_bound(const Vec& coefficients,
                                               const std::vector<int>& parts,
                                               const GammaTable& gammas,
                                               BoundVariant variant = BoundVariant::standard) {
    int n = static_cast<int>(coefficients.size());
    int sum = 0;
    for (int p : parts) {
        if (p < 1) throw ValidationError("composition_bound: parts must be positive");
        sum += p;
    }
    if (sum != n) throw ValidationError("composition_bound: parts must sum to the dimension");
    double total = 0.0;
    int pos = 0;
    for (int p : parts) {
        double ab = coefficients[pos];
        double d = 1.0;
        for (int j = 0; j < p; ++j) d *= coefficients[pos + j];
        GammaEntry ge = gammas.get(p + 1);
        // hypothesis compared in squared form; exact rational powers keep
        // boundary cases (like the all-ones profile) free of rounding fuzz
        double g2d = ge.has_exact_power
                         ? static_cast<double>(ge.pow2d_num) / static_cast<double>(ge.pow2d_den)
                         : std::pow(ge.value, 2 * (p + 1));
        bool ok;
        double term;
        if (variant == BoundVariant::standard) {
            double lhs = 4.0 * std::pow(ab, 2 * p);
            double rhs = ge.has_exact_power
                             ? d * d * static_cast<double>(ge.pow2d_num) /
                                   static_cast<double>(ge.pow2d_den)
                             : d * d * g2d;
            ok = lhs >= rhs;
            term = ab * ab - std::pow(ab, 2 * p + 2) / (d * d * g2d);
        } else {
            double lhs = 4.0 * ab * ab;
            double rhs = d * d * g2d;
            ok = lhs >= rhs;
            term = ab * ab - std::pow(ab, 2 * p + 2) / (d * d * std::sqrt(g2d));
        }
        if (!ok) return std::nullopt;
        total += term;
        pos += p;
    }
    return total;
}

struct DecompositionCheck {
    double lhs = 0.0; // covrad^2 of the whole lattice
    double rhs = 0.0; // covrad^2 of the subgroup plus covrad^2 of the projection
};

inline DecompositionCheck decomposition_check(const Lattice& x, const SublatticeWitness& w,
                                              double tol = 1e-4) {
    // subgroup as a lattice in its own span
    Mat q = orthonormalized(w.generators);
    Mat in_span;
    for (const auto& g : w.generators) {
        Vec coords(w.rank);
        for (std::size_t j = 0; j < w.rank; ++j) coords[j] = dot(g, q[j]);
        in_span.push_back(std::move(coords));
    }
    Lattice sub = Lattice::from_rows(std::move(in_span));
    Lattice proj = project_complement(x, w);
    // lhs from the certified lower bound, rhs from certified upper bounds, so
    // lhs <= rhs is implied by the decomposition inequality itself
    double cx = covering_radius(x, tol).value;
    double cs = covering_radius(sub, tol).value + tol;
    double cp = covering_radius(proj, tol).value + tol;
    DecompositionCheck out;
    out.lhs = cx * cx;
    out.rhs = cs * cs + cp * cp;
    return out;
}

// AM-GM bound on the product form: (covrad^2/n)^{n/2}; at most 2^-n whenever
// covrad <= sqrt(n)/2.
inline double product_form_bound(const Lattice& x, double tol = 1e-6) {
    CoveringRadius cr = covering_radius(x, tol);
    double n = static_cast<double>(x.dim);
    return std::pow(cr.value * cr.value / n, 0.5 * n);
}

} // namespace gon
