#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gon/enumerate.hpp"
#include "gon/gamma.hpp"
#include "gon/lattice.hpp"
#include "gon/reduction.hpp"

namespace gon {

inline constexpr std::size_t kAlphaDimCap = 8;

struct StabilityReport {
    double alpha = 0.0;
    Vec alpha_by_rank;          // alpha_1..alpha_n
    SublatticeWitness witness;  // attains alpha
    bool stable = false;
    std::string mode = "float"; // "float" or "exact"
};

inline std::vector<SublatticeWitness> canonical_filtration_scaled(const Lattice& y,
                                                                  const GammaTable& gammas);

namespace detail {

inline void check_alpha_dim(std::size_t n) {
    if (n > kAlphaDimCap)
        throw CapExceededError("alpha/stability search is capped at dimension " +
                               std::to_string(kAlphaDimCap) + " (no heuristic tier)");
}

// gcd of coefficient vector entries
inline long long coeff_gcd(const Coeffs& c) {
    long long g = 0;
    for (long long v : c) {
        long long a = std::llabs(v);
        while (a) { long long t = g % a; g = a; a = t; }
    }
    return g;
}

struct SubHit {
    double covol = 0.0;
    IntMat coeffs; // rows w.r.t. the search basis
};

// Recursive minimal-covolume search over rank-r sublattices, complete for
// covolumes below `budget`: a minimizer contains a vector of length at most
// gamma_r * |L|^{1/r} (Minkowski/Hermite), each such vector is enumerated, and
// the search recurses on the projection orthogonal to it. Sound for any upper
// bounds gamma_r; the table supplies exact values through dimension 8.
class SublatticeSearch {
public:
    explicit SublatticeSearch(const GammaTable& g) : gammas_(g) {}

    std::optional<SubHit> min_cov(const Mat& rows, std::size_t r, double budget) const {
        if (r == 0 || rows.size() < r || budget <= 0.0) return std::nullopt;
        if (r == 1) {
            EnumResult sv = shortest_vector_enum(rows);
            double len = std::sqrt(sv.norm_sq);
            if (!(len < budget)) return std::nullopt;
            SubHit h;
            h.covol = len;
            h.coeffs.push_back(to_intvec(sv.coeffs));
            return h;
        }
        double gr = gammas_.value(static_cast<int>(r));
        std::optional<SubHit> best;
        double cur_budget = budget;
        auto cands = vectors_in_ball(rows, square(gr * std::pow(cur_budget, 1.0 / r)) * kSlack);
        for (const auto& cand : cands) {
            if (coeff_gcd(cand.coeffs) != 1) continue;
            double len = std::sqrt(cand.norm_sq);
            if (len > gr * std::pow(cur_budget, 1.0 / r) * (1.0 + 1e-12)) break;
            Projection pr = project_off(rows, cand.coeffs);
            auto sub = min_cov(pr.rows, r - 1, cur_budget / len);
            if (!sub) continue;
            double covol = len * sub->covol;
            if (covol < cur_budget) {
                SubHit h;
                h.covol = covol;
                h.coeffs.push_back(to_intvec(cand.coeffs));
                for (const auto& d : sub->coeffs) h.coeffs.push_back(pr.lift(d));
                best = std::move(h);
                cur_budget = covol;
            }
        }
        return best;
    }

    // Collects every primitive rank-r sublattice with covolume < budget,
    // deduplicated by Hermite normal form of the coefficient rows.
    void collect(const Mat& rows, std::size_t r, double budget,
                 std::map<std::string, SubHit>& out) const {
        if (r == 0 || rows.size() < r || budget <= 0.0) return;
        if (r == 1) {
            for (const auto& cand : vectors_in_ball(rows, square(budget) * kSlack)) {
                if (coeff_gcd(cand.coeffs) != 1) continue;
                double len = std::sqrt(cand.norm_sq);
                if (!(len < budget)) continue;
                SubHit h;
                h.covol = len;
                h.coeffs.push_back(to_intvec(cand.coeffs));
                add(out, std::move(h));
            }
            return;
        }
        double gr = gammas_.value(static_cast<int>(r));
        for (const auto& cand : vectors_in_ball(rows, square(gr * std::pow(budget, 1.0 / r)) * kSlack)) {
            if (coeff_gcd(cand.coeffs) != 1) continue;
            double len = std::sqrt(cand.norm_sq);
            Projection pr = project_off(rows, cand.coeffs);
            std::map<std::string, SubHit> subs;
            collect(pr.rows, r - 1, budget / len, subs);
            for (auto& [key, sub] : subs) {
                (void)key;
                double covol = len * sub.covol;
                if (!(covol < budget)) continue;
                SubHit h;
                h.covol = covol;
                h.coeffs.push_back(to_intvec(cand.coeffs));
                for (const auto& d : sub.coeffs) h.coeffs.push_back(pr.lift(d));
                add(out, std::move(h));
            }
        }
    }

private:
    static constexpr double kSlack = 1.0 + 1e-9;

    const GammaTable& gammas_;

    static double square(double v) { return v * v; }

    static IntVec to_intvec(const Coeffs& c) {
        IntVec v(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) v[i] = BigInt(c[i]);
        return v;
    }

    struct Projection {
        Mat rows;      // (m-1) vectors spanning the projected lattice
        IntMat lift_m; // rows 1..m-1 of the unimodular completion
        IntVec lift(const IntVec& d) const {
            IntVec out(lift_m[0].size(), BigInt(0));
            for (std::size_t i = 0; i < d.size(); ++i)
                if (!d[i].is_zero())
                    for (std::size_t j = 0; j < out.size(); ++j)
                        out[j] += d[i] * lift_m[i][j];
            return out;
        }
    };

    static Projection project_off(const Mat& rows, const Coeffs& c) {
        std::size_t m = rows.size();
        IntVec ci(m);
        for (std::size_t i = 0; i < m; ++i) ci[i] = BigInt(c[i]);
        IntMat full = unimodular_completion(ci);
        Mat new_rows(m, Vec(rows[0].size(), 0.0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (!full[i][j].is_zero())
                    axpy(new_rows[i], full[i][j].to_double(), rows[j]);
        Mat head = {new_rows[0]};
        Mat q = orthonormalized(head);
        Projection pr;
        for (std::size_t i = 1; i < m; ++i) pr.rows.push_back(project_out(new_rows[i], q));
        pr.lift_m.assign(full.begin() + 1, full.end());
        return pr;
    }

    static void add(std::map<std::string, SubHit>& out, SubHit h) {
        IntMat key_mat = hnf(h.coeffs);
        std::string key;
        for (const auto& row : key_mat) {
            for (const auto& v : row) { key += v.to_string(); key += ','; }
            key += ';';
        }
        out.emplace(std::move(key), std::move(h));
    }
};

// Maps coefficients over a derived basis (integer combinations of x's basis)
// back to coefficients over x's basis.
inline IntMat coeffs_to_ambient(const Lattice& x, const Mat& search_rows, const IntMat& coeffs) {
    IntMat out;
    for (const auto& c : coeffs) {
        Vec v(x.dim, 0.0);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (!c[j].is_zero()) axpy(v, c[j].to_double(), search_rows[j]);
        out.push_back(coefficients_in(x, v, 1e-5));
    }
    return out;
}

} // namespace detail

struct AlphaK {
    double value = 0.0;
    SublatticeWitness witness;
};

// alpha_k: minimum of covolume^{1/k} over rank-k subgroups.
inline AlphaK alpha_k(const Lattice& x, std::size_t k,
                      const GammaTable& gammas = GammaTable::exact_defaults()) {
    detail::check_alpha_dim(x.dim);
    if (k < 1 || k > x.dim) throw ValidationError("alpha_k: rank out of range");
    if (!x.is_unimodular(1e-6))
        throw ValidationError("alpha_k: lattice must be unimodular");
    Mat red = lll_rows(x.basis);
    AlphaK res;
    if (k == x.dim) {
        res.witness = make_witness(x, int_identity(x.dim));
        res.value = std::pow(res.witness.covolume, 1.0 / static_cast<double>(k));
        return res;
    }
    // baseline: saturation of the first k reduced vectors
    Mat first_k(red.begin(), red.begin() + static_cast<std::ptrdiff_t>(k));
    SublatticeWitness base = saturate(x, first_k);
    double budget = base.covolume * (1.0 + 1e-9);
    detail::SublatticeSearch search(gammas);
    auto hit = search.min_cov(red, k, budget);
    if (hit) {
        SublatticeWitness w = make_witness(x, detail::coeffs_to_ambient(x, red, hit->coeffs));
        if (w.covolume < base.covolume) {
            res.witness = std::move(w);
        } else {
            res.witness = std::move(base);
        }
    } else {
        res.witness = std::move(base);
    }
    res.value = std::pow(res.witness.covolume, 1.0 / static_cast<double>(k));
    return res;
}

// Full stability report; near-boundary verdicts re-check exactly when the
// input carries rational entries (stability is an exact-threshold property).
inline StabilityReport alpha(const Lattice& x,
                             const GammaTable& gammas = GammaTable::exact_defaults()) {
    detail::check_alpha_dim(x.dim);
    StabilityReport rep;
    rep.alpha_by_rank.resize(x.dim);
    std::size_t best_k = 0;
    for (std::size_t k = 1; k <= x.dim; ++k) {
        AlphaK ak = alpha_k(x, k, gammas);
        rep.alpha_by_rank[k - 1] = ak.value;
        if (k == 1 || ak.value < rep.alpha - 1e-15) {
            rep.alpha = ak.value;
            rep.witness = std::move(ak.witness);
            best_k = k;
        }
    }
    (void)best_k;
    rep.stable = rep.alpha >= 1.0 - 1e-9;
    rep.mode = "float";
    if (x.rational && std::fabs(rep.alpha - 1.0) < 1e-7) {
        // exact boundary decision: any subgroup with covolume^2 < 1 in its span?
        Mat red = lll_rows(x.basis);
        detail::SublatticeSearch search(gammas);
        bool violated = false;
        for (std::size_t r = 1; r < x.dim && !violated; ++r) {
            std::map<std::string, detail::SubHit> subs;
            search.collect(red, r, 1.0 + 1e-6, subs);
            for (const auto& [key, hit] : subs) {
                (void)key;
                IntMat amb = detail::coeffs_to_ambient(x, red, hit.coeffs);
                if (covolume_sq_exact(x, amb) < Rational(1)) { violated = true; break; }
            }
        }
        rep.stable = !violated;
        rep.mode = "exact";
    }
    return rep;
}

// Subgroups nearly attaining alpha, their joint span and its dimension.
struct DeltaSpan {
    double delta = 0.0;
    std::size_t dimension = 0;
    Mat span_basis;
    std::vector<SublatticeWitness> members;
};

inline DeltaSpan min_delta(const Lattice& x, double delta,
                           const GammaTable& gammas = GammaTable::exact_defaults()) {
    detail::check_alpha_dim(x.dim);
    if (!(delta > 0.0) || delta > static_cast<double>(x.dim) + 1.0)
        throw ValidationError("min_delta: delta must lie in (0, dim+1]");
    StabilityReport rep = alpha(x, gammas);
    double threshold = (1.0 + delta) * rep.alpha;
    Mat red = lll_rows(x.basis);
    detail::SublatticeSearch search(gammas);
    DeltaSpan out;
    out.delta = delta;
    IntMat stacked;
    for (std::size_t r = 1; r <= x.dim; ++r) {
        if (r == x.dim) {
            // full-rank primitive subgroup is the lattice itself
            double v = std::pow(x.det_abs(), 1.0 / static_cast<double>(x.dim));
            if (v < threshold) {
                out.members.push_back(make_witness(x, int_identity(x.dim)));
                for (const auto& row : int_identity(x.dim)) stacked.push_back(row);
            }
            continue;
        }
        std::map<std::string, detail::SubHit> subs;
        search.collect(red, r, std::pow(threshold, static_cast<double>(r)), subs);
        for (const auto& [key, hit] : subs) {
            (void)key;
            if (!(std::pow(hit.covol, 1.0 / static_cast<double>(r)) < threshold)) continue;
            SublatticeWitness w = make_witness(x, detail::coeffs_to_ambient(x, red, hit.coeffs));
            for (const auto& row : w.coeffs) stacked.push_back(row);
            out.members.push_back(std::move(w));
        }
    }
    IntMat span = hnf(stacked);
    out.dimension = span.size();
    out.span_basis = coeff_rows_to_vectors(span, x.basis);
    std::sort(out.members.begin(), out.members.end(),
              [](const SublatticeWitness& a, const SublatticeWitness& b) {
                  if (a.rank != b.rank) return a.rank < b.rank;
                  return a.covolume < b.covolume;
              });
    return out;
}

// Harder-Narasimhan style canonical flag: repeatedly take the maximal-rank
// minimizer of covolume^{1/rank}, saturate, and recurse on the projected
// complement. Returns the strictly increasing proper steps followed by the
// full lattice.
inline std::vector<SublatticeWitness> canonical_filtration(
    const Lattice& x, const GammaTable& gammas = GammaTable::exact_defaults()) {
    detail::check_alpha_dim(x.dim);
    StabilityReport rep = alpha(x, gammas);
    std::vector<SublatticeWitness> flag;
    if (rep.stable) {
        flag.push_back(make_witness(x, int_identity(x.dim)));
        return flag;
    }
    // collect all minimizers across ranks
    Mat red = lll_rows(x.basis);
    detail::SublatticeSearch search(gammas);
    SublatticeWitness first;
    bool have = false;
    for (std::size_t r = 1; r <= x.dim; ++r) {
        double target = std::pow(rep.alpha * (1.0 + 1e-9), static_cast<double>(r));
        std::map<std::string, detail::SubHit> subs;
        if (r < x.dim) {
            search.collect(red, r, target * (1.0 + 1e-9), subs);
        } else if (x.det_abs() <= target) {
            detail::SubHit h;
            h.covol = x.det_abs();
            h.coeffs = int_identity(x.dim);
            subs.emplace("full", std::move(h));
        }
        for (const auto& [key, hit] : subs) {
            (void)key;
            double val = std::pow(hit.covol, 1.0 / static_cast<double>(r));
            if (val > rep.alpha * (1.0 + 1e-9)) continue;
            SublatticeWitness w = make_witness(x, detail::coeffs_to_ambient(x, red, hit.coeffs));
            if (!have || w.rank > first.rank) {
                first = std::move(w);
                have = true;
            }
        }
    }
    if (!have) throw std::logic_error("canonical_filtration: minimizer not found");
    flag.push_back(first);
    if (first.rank == x.dim) return flag;
    // recurse on the projected complement and lift
    Lattice proj = project_complement(x, first);
    IntMat full = extend_to_unimodular(first.coeffs);
    std::vector<SublatticeWitness> tail_flag = canonical_filtration_scaled(proj, gammas);
    for (const auto& member : tail_flag) {
        IntMat lifted = first.coeffs;
        for (const auto& d : member.coeffs) {
            IntVec row(x.dim, BigInt(0));
            for (std::size_t i = 0; i < d.size(); ++i)
                if (!d[i].is_zero())
                    for (std::size_t j = 0; j < x.dim; ++j)
                        row[j] += d[i] * full[first.rank + i][j];
            lifted.push_back(std::move(row));
        }
        flag.push_back(make_witness(x, std::move(lifted)));
    }
    return flag;
}

// Filtration of a possibly non-unimodular lattice: normalize the covolume,
// compute the flag, and reuse the coefficient matrices (scaling does not
// change minimizing subgroups).
inline std::vector<SublatticeWitness> canonical_filtration_scaled(
    const Lattice& y, const GammaTable& gammas) {
    double s = std::pow(y.det_abs(), -1.0 / static_cast<double>(y.dim));
    Mat rows = y.basis;
    for (auto& row : rows)
        for (auto& v : row) v *= s;
    Lattice normalized = Lattice::from_rows(std::move(rows));
    std::vector<SublatticeWitness> flag = canonical_filtration(normalized, gammas);
    std::vector<SublatticeWitness> out;
    for (const auto& w : flag) out.push_back(make_witness(y, w.coeffs));
    return out;
}

} // namespace gon
