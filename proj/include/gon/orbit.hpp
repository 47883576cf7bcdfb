#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gon/lattice.hpp"
#include "gon/rng.hpp"
#include "gon/stability.hpp"

namespace gon {

// Point of the positive diagonal group in log coordinates, renormalized to the
// trace-zero hyperplane on construction.
struct DiagonalPoint {
    Vec log_coords;

    static DiagonalPoint make(Vec coords) {
        double mean = 0.0;
        for (double v : coords) mean += v;
        mean /= static_cast<double>(coords.size());
        for (double& v : coords) v -= mean;
        return DiagonalPoint{std::move(coords)};
    }
};

inline Lattice apply_diagonal(const Lattice& x, const DiagonalPoint& a) {
    if (a.log_coords.size() != x.dim)
        throw ValidationError("apply_diagonal: dimension mismatch");
    Mat rows = x.basis;
    for (auto& row : rows)
        for (std::size_t j = 0; j < x.dim; ++j) row[j] *= std::exp(a.log_coords[j]);
    return Lattice::from_rows(std::move(rows));
}

struct OrbitStep {
    DiagonalPoint point;
    double alpha = 0.0;
};

inline bool lex_vec_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

struct OrbitTrace {
    std::vector<OrbitStep> steps;
    OrbitStep best;
    std::uint64_t budget_used = 0;
    bool divergence_warning = false; // alpha_1 collapsed along the way
};

// Simulated annealing over the trace-zero hyperplane. Proposals mix isotropic
// jitter with a move aligned to the current alpha witness: expand the
// coordinates carrying the witness span and contract the rest, which grows the
// witness covolume fastest. Every reported alpha is a certified value, so the
// best entry is a sound lower bound for the orbit supremum.
inline OrbitTrace search_max_alpha(const Lattice& x, std::uint64_t budget, std::uint64_t seed,
                                   const std::string& schedule = "geometric",
                                   const GammaTable& gammas = GammaTable::exact_defaults()) {
    detail::check_alpha_dim(x.dim);
    if (budget == 0) throw ValidationError("search_max_alpha: budget must be > 0");
    std::size_t n = x.dim;
    Rng rng(seed, 0x0b17);

    OrbitTrace trace;
    auto evaluate = [&](const DiagonalPoint& a) {
        StabilityReport rep = alpha(apply_diagonal(x, a), gammas);
        ++trace.budget_used;
        if (rep.alpha_by_rank[0] < 1e-3) trace.divergence_warning = true;
        return rep;
    };

    DiagonalPoint cur = DiagonalPoint::make(Vec(n, 0.0));
    StabilityReport cur_rep = evaluate(cur);
    trace.steps.push_back({cur, cur_rep.alpha});
    trace.best = trace.steps.back();

    double t0 = 0.08;
    double t1 = 0.004;
    double decay = schedule == "geometric" && budget > 1
                       ? std::pow(t1 / t0, 1.0 / static_cast<double>(budget))
                       : 1.0;
    double temp = t0;
    double step_scale = 0.25;

    while (trace.budget_used < budget) {
        Vec dir(n, 0.0);
        bool witness_move = rng.next_double() < 0.7 && cur_rep.witness.rank > 0 &&
                            cur_rep.witness.rank < n;
        if (witness_move) {
            // coordinate weights of the witness span: ||proj of e_i onto S||^2
            Mat q = orthonormalized(cur_rep.witness.generators);
            double r = static_cast<double>(cur_rep.witness.rank);
            for (std::size_t i = 0; i < n; ++i) {
                double w = 0.0;
                for (const auto& e : q) w += e[i] * e[i];
                dir[i] = w - r / static_cast<double>(n); // trace-zero
            }
            double nn = norm(dir);
            if (nn > 1e-9)
                for (double& v : dir) v /= nn;
            else
                witness_move = false;
        }
        if (!witness_move) {
            for (double& v : dir) v = rng.next_gaussian();
            double mean = 0.0;
            for (double v : dir) mean += v;
            mean /= static_cast<double>(n);
            for (double& v : dir) v -= mean;
            double nn = norm(dir);
            if (nn > 1e-9)
                for (double& v : dir) v /= nn;
        }
        double eta = step_scale * (0.3 + rng.next_double());
        Vec cand = cur.log_coords;
        for (std::size_t i = 0; i < n; ++i) cand[i] += eta * dir[i];
        DiagonalPoint next = DiagonalPoint::make(cand);
        StabilityReport rep = evaluate(next);
        trace.steps.push_back({next, rep.alpha});
        bool accept = rep.alpha >= cur_rep.alpha ||
                      rng.next_double() < std::exp((rep.alpha - cur_rep.alpha) / temp);
        if (accept) {
            cur = next;
            cur_rep = std::move(rep);
        }
        if (trace.steps.back().alpha > trace.best.alpha) {
            trace.best = trace.steps.back();
        } else if (trace.steps.back().alpha == trace.best.alpha &&
                   lex_vec_less(trace.steps.back().point.log_coords, trace.best.point.log_coords)) {
            trace.best = trace.steps.back();
        }
        // restart from the best point when the walk collapses
        if (cur_rep.alpha < trace.best.alpha - 0.35) {
            cur = trace.best.point;
            cur_rep = evaluate(cur);
        }
        temp *= decay;
    }
    return trace;
}

struct UkDiagnostic {
    std::size_t k = 0;
    double delta_lo = 0.0;
    double delta_hi = 0.0;
    std::vector<std::size_t> dims; // dim at the sampled deltas
};

// Minimal k whose delta-span dimension equals k at delta sampled around
// k*epsilon (at k*eps*(1 -+ 1/8) and k*eps). The sampled neighborhood is a
// finite proxy for an open-interval condition and is reported as such.
inline UkDiagnostic uk_diagnostic(const Lattice& x, double epsilon, const DiagonalPoint& a,
                                  const GammaTable& gammas = GammaTable::exact_defaults()) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw ValidationError("uk_diagnostic: epsilon must lie in (0,1)");
    Lattice ax = apply_diagonal(x, a);
    for (std::size_t k = 1; k <= x.dim; ++k) {
        double base = static_cast<double>(k) * epsilon;
        std::vector<double> deltas = {base * (1.0 - 0.125), base, base * (1.0 + 0.125)};
        std::vector<std::size_t> dims;
        bool all_k = true;
        for (double d : deltas) {
            std::size_t dim = min_delta(ax, d, gammas).dimension;
            dims.push_back(dim);
            all_k = all_k && dim == k;
        }
        if (all_k) {
            UkDiagnostic out;
            out.k = k;
            out.delta_lo = deltas.front();
            out.delta_hi = deltas.back();
            out.dims = dims;
            return out;
        }
    }
    // the top rank always qualifies in the limit; if sampling missed it,
    // report the full-dimensional bucket
    UkDiagnostic out;
    out.k = x.dim;
    out.delta_lo = static_cast<double>(x.dim) * epsilon * (1.0 - 0.125);
    out.delta_hi = static_cast<double>(x.dim) * epsilon * (1.0 + 0.125);
    return out;
}

} // namespace gon
