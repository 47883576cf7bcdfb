#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "gon/gamma.hpp"
#include "gon/interval.hpp"
#include "gon/lattice.hpp"
#include "gon/rng.hpp"

namespace gon {

inline constexpr int kVerifyDimCap = 7;

struct Composition {
    std::vector<int> parts;
};

inline std::vector<Composition> compositions(int n) {
    if (n < 1) throw ValidationError("compositions: n must be >= 1");
    if (n == 1) return {Composition{{1}}};
    std::vector<Composition> out;
    for (int first = 1; first <= n; ++first) {
        if (first == n) {
            out.push_back(Composition{{n}});
            continue;
        }
        for (const auto& rest : compositions(n - first)) {
            Composition c;
            c.parts.push_back(first);
            c.parts.insert(c.parts.end(), rest.parts.begin(), rest.parts.end());
            out.push_back(std::move(c));
        }
    }
    return out;
}

// Axis-aligned box in the free log-profile coordinates l_1..l_{n-1}
// (l_n is eliminated by the unit-covolume relation).
struct LogBox {
    std::vector<Interval> iv;
    std::size_t vars() const { return iv.size(); }
    double max_width() const {
        double w = 0.0;
        for (const auto& i : iv) w = std::max(w, i.hi - i.lo);
        return w;
    }
    double volume() const {
        double v = 1.0;
        for (const auto& i : iv) v *= (i.hi - i.lo);
        return v;
    }
};

// integer-coefficient linear form over the free coordinates
using LinForm = std::vector<int>;

namespace cover_detail {

inline LinForm unit_form(std::size_t vars, int b /*1-based coordinate*/) {
    LinForm f(vars, 0);
    if (static_cast<std::size_t>(b) <= vars) {
        f[b - 1] = 1;
    } else {
        for (auto& c : f) c = -1; // l_n = -(l_1+...+l_{n-1})
    }
    return f;
}

inline void add_scaled(LinForm& into, const LinForm& f, int s) {
    for (std::size_t i = 0; i < into.size(); ++i) into[i] += s * f[i];
}

// ------- arithmetic policies -------

struct FloatPolicy {
    using IV = Interval;
    using Scalar = double;
    static IV exact_zero() { return Interval::exact(0.0); }
    static IV add(IV a, IV b) { return iv::add(a, b); }
    static IV sub(IV a, IV b) { return iv::sub(a, b); }
    static IV mul(IV a, IV b) { return iv::mul(a, b); }
    static IV mul_int(IV a, int s) { return iv::mul_scalar(a, static_cast<double>(s)); }
    static IV exp(IV a) { return iv::exp(a); }
    static IV point_lo(IV a) { return Interval::exact(a.lo); }
    static IV point_hi(IV a) { return Interval::exact(a.hi); }
    static IV from_box(const Interval& b) { return b; }
    static IV from_int(std::int64_t v) { return Interval::exact(static_cast<double>(v)); }
    static IV from_ratio(std::int64_t num, std::int64_t den) {
        double q = static_cast<double>(num) / static_cast<double>(den);
        if (q * static_cast<double>(den) == static_cast<double>(num))
            return Interval::exact(q); // representable quotient
        return Interval::bounds(iv::down(q), iv::up(q));
    }
    static IV from_double_hull(double v) { return Interval::bounds(iv::down(v), iv::up(v)); }
    static Scalar quarter_n(int n) { return static_cast<double>(n) / 4.0; }
    static Scalar lo(IV a) { return a.lo; }
    static Scalar hi(IV a) { return a.hi; }
    static bool le(Scalar a, Scalar b) { return a <= b; }
    static bool ge_zero(Scalar a) { return a >= 0.0; }
    static bool le_zero(Scalar a) { return a <= 0.0; }
};

struct ExactPolicy {
    using IV = RatInterval;
    using Scalar = Rational;
    static IV exact_zero() { return RatInterval::exact(Rational(0)); }
    static IV add(const IV& a, const IV& b) { return riv::add(a, b); }
    static IV sub(const IV& a, const IV& b) { return riv::sub(a, b); }
    static IV mul(const IV& a, const IV& b) { return riv::mul(a, b); }
    static IV mul_int(const IV& a, int s) { return riv::mul_scalar(a, Rational(s)); }
    static IV exp(const IV& a) { return riv::exp(a); }
    static IV point_lo(const IV& a) { return RatInterval::exact(a.lo); }
    static IV point_hi(const IV& a) { return RatInterval::exact(a.hi); }
    static IV from_box(const Interval& b) { return RatInterval::from_double_bounds(b.lo, b.hi); }
    static IV from_int(std::int64_t v) { return RatInterval::exact(Rational(v)); }
    static IV from_ratio(std::int64_t num, std::int64_t den) {
        return RatInterval::exact(Rational(num, den));
    }
    static IV from_double_hull(double) {
        throw std::logic_error("exact validation requires exact gamma powers");
    }
    static Scalar quarter_n(int n) { return Rational(n, 4); }
    static Scalar lo(const IV& a) { return a.lo; }
    static Scalar hi(const IV& a) { return a.hi; }
    static bool le(const Scalar& a, const Scalar& b) { return a <= b; }
    static bool ge_zero(const Scalar& a) { return a.sign() >= 0; }
    static bool le_zero(const Scalar& a) { return a.sign() <= 0; }
};

template <class P>
typename P::IV eval_lin(const LinForm& f, const std::vector<typename P::IV>& box) {
    typename P::IV acc = P::exact_zero();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        acc = P::add(acc, P::mul_int(box[i], f[i]));
    }
    return acc;
}

// per-block data of the covering condition
struct BlockTerm {
    LinForm l1;   // exponent of A_b^2
    LinForm l2;   // exponent of A_b^{2p+2}/d_i^2
    LinForm lhyp; // exponent in the admissibility test 4*e^{lhyp} >= R
    bool exact_pow = false;
    std::int64_t num = 0, den = 1; // R = gamma_{p+1}^{2(p+1)} when exact
    double approx_pow = 0.0;       // R as double otherwise
    bool alternate_denominator = false;
};

inline std::vector<BlockTerm> build_terms(int n, const Composition& comp,
                                          const GammaTable& gammas, bool alternate) {
    std::size_t vars = static_cast<std::size_t>(n - 1);
    std::vector<BlockTerm> terms;
    int pos = 1;
    for (int p : comp.parts) {
        BlockTerm t;
        LinForm lb = unit_form(vars, pos);
        LinForm lsum(vars, 0);
        for (int j = 0; j < p; ++j) add_scaled(lsum, unit_form(vars, pos + j), 1);
        t.l1.assign(vars, 0);
        add_scaled(t.l1, lb, 2);
        t.l2.assign(vars, 0);
        add_scaled(t.l2, lb, 2 * p + 2);
        add_scaled(t.l2, lsum, -2);
        t.lhyp.assign(vars, 0);
        add_scaled(t.lhyp, lb, alternate ? 2 : 2 * p);
        add_scaled(t.lhyp, lsum, -2);
        GammaEntry ge = gammas.get(p + 1);
        t.exact_pow = ge.has_exact_power;
        if (t.exact_pow) {
            t.num = ge.pow2d_num;
            t.den = ge.pow2d_den;
        } else {
            t.approx_pow = std::pow(ge.value, 2 * (p + 1));
        }
        t.alternate_denominator = alternate;
        terms.push_back(std::move(t));
        pos += p;
    }
    return terms;
}

// constant c multiplying e^{l2} in the bound term: 1/R, or 1/sqrt(R) in the
// alternate reading
template <class P>
typename P::IV term_constant(const BlockTerm& t) {
    if (!t.alternate_denominator) {
        if (t.exact_pow) return P::from_ratio(t.den, t.num);
        return P::from_double_hull(1.0 / t.approx_pow);
    }
    double r = t.exact_pow ? static_cast<double>(t.num) / static_cast<double>(t.den)
                           : t.approx_pow;
    return P::from_double_hull(1.0 / std::sqrt(r));
}

// for all points of the box: 4*e^{lhyp} >= R
template <class P>
bool hypothesis_holds(const BlockTerm& t, const std::vector<typename P::IV>& box) {
    auto l = eval_lin<P>(t.lhyp, box);
    auto lhs = P::mul_int(P::exp(P::point_lo(l)), 4);
    if (t.exact_pow) {
        auto scaled = P::mul_int(lhs, static_cast<int>(t.den));
        // need lo(4*e^L*den) >= num
        return P::le(P::hi(P::from_int(t.num)), P::lo(scaled));
    }
    auto rhs = P::from_double_hull(t.approx_pow);
    return P::le(P::hi(rhs), P::lo(lhs));
}

// upper bound of the bound-sum over the box: coordinates whose partial
// derivative has definite sign get pinned to the maximizing endpoint first
// (handles the equality corners exactly), then per-term corner evaluation.
template <class P>
typename P::Scalar bound_sum_upper(const std::vector<BlockTerm>& terms,
                                   std::vector<typename P::IV> box) {
    using IV = typename P::IV;
    std::size_t vars = box.empty() ? 0 : box.size();
    std::vector<IV> consts;
    consts.reserve(terms.size());
    for (const auto& t : terms) consts.push_back(term_constant<P>(t));

    for (std::size_t pass = 0; pass < vars + 1; ++pass) {
        bool changed = false;
        for (std::size_t j = 0; j < vars; ++j) {
            bool degenerate = !(P::lo(box[j]) < P::hi(box[j]));
            if (degenerate) continue;
            // d(sum)/dl_j = sum_i e^{L1_i} * (a_ij - c_i * b_ij * e^{L2_i - L1_i})
            IV dsum = P::exact_zero();
            bool any = false;
            for (std::size_t i = 0; i < terms.size(); ++i) {
                int a = terms[i].l1[j];
                int b = terms[i].l2[j];
                if (a == 0 && b == 0) continue;
                any = true;
                LinForm diff = terms[i].l2;
                add_scaled(diff, terms[i].l1, -1);
                IV e1 = P::exp(eval_lin<P>(terms[i].l1, box));
                IV ed = P::exp(eval_lin<P>(diff, box));
                IV bracket = P::sub(P::mul_int(P::from_int(1), a),
                                    P::mul_int(P::mul(consts[i], ed), b));
                dsum = P::add(dsum, P::mul(e1, bracket));
            }
            if (!any) continue;
            if (P::le_zero(P::hi(dsum))) {
                box[j] = P::point_lo(box[j]);
                changed = true;
            } else if (P::ge_zero(P::lo(dsum))) {
                box[j] = P::point_hi(box[j]);
                changed = true;
            }
        }
        if (!changed) break;
    }

    typename P::Scalar total = P::lo(P::exact_zero());
    IV sum = P::exact_zero();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        IV e1 = P::exp(eval_lin<P>(terms[i].l1, box));
        IV e2 = P::exp(eval_lin<P>(terms[i].l2, box));
        sum = P::add(sum, P::sub(e1, P::mul(consts[i], e2)));
    }
    total = P::hi(sum);
    return total;
}

template <class P>
bool region_covers_impl(int n, const std::vector<BlockTerm>& terms,
                        const std::vector<typename P::IV>& box) {
    for (const auto& t : terms)
        if (!hypothesis_holds<P>(t, box)) return false;
    auto upper = bound_sum_upper<P>(terms, box);
    return P::le(upper, P::quarter_n(n));
}

template <class P>
std::vector<typename P::IV> box_of(const LogBox& b) {
    std::vector<typename P::IV> out;
    out.reserve(b.iv.size());
    for (const auto& i : b.iv) out.push_back(P::from_box(i));
    return out;
}

// ------- profile-region (stability constraints) classification -------

struct RegionConstraint {
    LinForm lin;
    int log_const; // 0: none, 1: +ln(4/3), 2: +ln(3/2)
};

inline std::vector<RegionConstraint> region_constraints(int n) {
    std::size_t vars = static_cast<std::size_t>(n - 1);
    std::vector<RegionConstraint> cs;
    // partial products of the profile stay >= 1: sum_{j<=i} l_j >= 0
    for (int i = 1; i <= n - 1; ++i) {
        RegionConstraint c{LinForm(vars, 0), 0};
        for (int j = 1; j <= i; ++j) add_scaled(c.lin, unit_form(vars, j), 1);
        cs.push_back(std::move(c));
    }
    // one-step ratio bound: 2*l_{i+1} - 2*l_i + ln(4/3) >= 0
    for (int i = 1; i <= n - 1; ++i) {
        RegionConstraint c{LinForm(vars, 0), 1};
        add_scaled(c.lin, unit_form(vars, i + 1), 2);
        add_scaled(c.lin, unit_form(vars, i), -2);
        cs.push_back(std::move(c));
    }
    // two-step ratio bound: 2*l_{i+2} - 2*l_i + ln(3/2) >= 0
    for (int i = 1; i + 2 <= n; ++i) {
        RegionConstraint c{LinForm(vars, 0), 2};
        add_scaled(c.lin, unit_form(vars, i + 2), 2);
        add_scaled(c.lin, unit_form(vars, i), -2);
        cs.push_back(std::move(c));
    }
    return cs;
}

} // namespace cover_detail

enum class BoxClass { Inside, Outside, Straddles };

inline BoxClass kzs_classify(int n, const LogBox& box) {
    using P = cover_detail::FloatPolicy;
    auto b = cover_detail::box_of<P>(box);
    Interval l43 = iv::log_4_3();
    Interval l32 = iv::log_3_2();
    bool all_inside = true;
    for (const auto& c : cover_detail::region_constraints(n)) {
        Interval v = cover_detail::eval_lin<P>(c.lin, b);
        if (c.log_const == 1) v = iv::add(v, l43);
        if (c.log_const == 2) v = iv::add(v, l32);
        // Outside when the constraint fails on the whole interior: either it
        // is strictly negative everywhere, or its maximum is <= 0 and it
        // genuinely varies over the box (a linear form is below its corner
        // maximum at every interior point).
        bool varies = false;
        for (std::size_t j = 0; j < c.lin.size(); ++j)
            varies = varies || (c.lin[j] != 0 && box.iv[j].lo < box.iv[j].hi);
        if (v.hi < 0.0 || (v.hi <= 0.0 && varies)) return BoxClass::Outside;
        if (!(v.lo >= 0.0)) all_inside = false;
    }
    return all_inside ? BoxClass::Inside : BoxClass::Straddles;
}

// Conservative covering test: true only when interval evaluation proves every
// point of the box passes each block admissibility test and the bound sum
// stays at or below n/4.
inline bool region_covers(const Composition& comp, const LogBox& box, const GammaTable& gammas,
                          bool alternate_variant = false) {
    int n = 0;
    for (int p : comp.parts) n += p;
    if (static_cast<int>(box.vars()) != n - 1)
        throw ValidationError("region_covers: box has wrong dimension");
    auto terms = cover_detail::build_terms(n, comp, gammas, alternate_variant);
    using P = cover_detail::FloatPolicy;
    return cover_detail::region_covers_impl<P>(n, terms, cover_detail::box_of<P>(box));
}

// Exact-rational re-check of a covered box (requires exact gamma powers).
inline bool region_covers_exact(const Composition& comp, const LogBox& box,
                                const GammaTable& gammas) {
    int n = 0;
    for (int p : comp.parts) n += p;
    auto terms = cover_detail::build_terms(n, comp, gammas, false);
    using P = cover_detail::ExactPolicy;
    return cover_detail::region_covers_impl<P>(n, terms, cover_detail::box_of<P>(box));
}

// Box provably containing every stable profile in log coordinates: l_1 >= 0
// with the chain bound l_j >= -(j-1)/2 * ln(4/3), and uppers from averaging
// the chain lower bounds against the zero-sum relation.
struct InitialBounds {
    LogBox box;
    std::string derivation;
};

inline InitialBounds initial_bounds(int n) {
    if (n < 2) throw ValidationError("initial_bounds: n must be >= 2");
    std::size_t vars = static_cast<std::size_t>(n - 1);
    Interval l43 = iv::log_4_3();
    double step_hi = iv::up(0.5 * l43.hi); // upper bound on ln(4/3)/2
    LogBox b;
    b.iv.resize(vars);
    for (std::size_t idx = 0; idx < vars; ++idx) {
        int i = static_cast<int>(idx) + 1;
        // l_1 >= 0 exactly; the exact zero endpoint matters at the all-ones corner
        double lo = (i == 1) ? 0.0 : iv::down(-step_hi * (i - 1));
        // 0 = sum_j l_j >= (n-i+1) l_i - sum_{j<i} ch(j-1) - sum_{j>i} ch(j-i)
        double left = 0.0, right = 0.0;
        for (int j = 1; j < i; ++j) left += static_cast<double>(j - 1);
        for (int j = i + 1; j <= n; ++j) right += static_cast<double>(j - i);
        double hi = iv::up((left + right) * step_hi / static_cast<double>(n - i + 1));
        b.iv[idx] = Interval::bounds(lo, hi);
    }
    InitialBounds out;
    out.box = b;
    out.derivation =
        "l_1 in [0, (n-1)/4*ln(4/3)] from the one-step ratio chain and the zero-sum "
        "relation; l_i lower bounds -(i-1)/2*ln(4/3) by chaining from l_1 >= 0; "
        "uppers by averaging the chain lower bounds of the other coordinates "
        "against sum_j l_j = 0.";
    return out;
}

// ------- certificates -------

enum class LeafVerdict { OutsideRegion, Covered, Unresolved };

struct CoverLeaf {
    LogBox box;
    LeafVerdict verdict = LeafVerdict::Unresolved;
    std::vector<int> composition; // set when verdict == Covered
};

struct CoverCertificate {
    int dim = 0;
    std::string variant = "standard";
    std::string gamma_provenance;
    double min_width = 0.0;
    bool covered = false;
    bool deadline_hit = false;
    std::string bounds_derivation;
    std::vector<CoverLeaf> leaves;
};

inline CoverCertificate verify_cover(int n, double min_width, const GammaTable& gammas,
                                     double deadline_seconds = 0.0,
                                     bool alternate_variant = false) {
    if (n < 1) throw ValidationError("verify_cover: n must be >= 1");
    if (n > kVerifyDimCap)
        throw CapExceededError("verify_cover is exercised only through dimension " +
                               std::to_string(kVerifyDimCap));
    if (!(min_width > 0.0)) throw ValidationError("verify_cover: min_width must be positive");

    CoverCertificate cert;
    cert.dim = n;
    cert.variant = alternate_variant ? "alternate" : "standard";
    cert.gamma_provenance = gammas.provenance_string();
    cert.min_width = min_width;

    auto comps = compositions(n);
    std::vector<std::vector<cover_detail::BlockTerm>> all_terms;
    for (const auto& c : comps)
        all_terms.push_back(cover_detail::build_terms(n, c, gammas, alternate_variant));

    if (n == 1) {
        // no free coordinates; the single profile A = (1) is covered by (1)
        LogBox point; // empty
        CoverLeaf leaf;
        leaf.box = point;
        using P = cover_detail::FloatPolicy;
        if (cover_detail::region_covers_impl<P>(1, all_terms[0],
                                                cover_detail::box_of<P>(point))) {
            leaf.verdict = LeafVerdict::Covered;
            leaf.composition = comps[0].parts;
        }
        cert.leaves.push_back(std::move(leaf));
        cert.covered = cert.leaves[0].verdict == LeafVerdict::Covered;
        return cert;
    }

    InitialBounds init = initial_bounds(n);
    cert.bounds_derivation = init.derivation;

    // seed with the orthant pieces so the all-ones profile sits on box corners
    std::deque<LogBox> queue;
    {
        std::vector<LogBox> seeds{LogBox{}};
        seeds[0].iv = {};
        for (std::size_t j = 0; j < init.box.iv.size(); ++j) {
            std::vector<LogBox> next;
            for (const auto& partial : seeds) {
                Interval full = init.box.iv[j];
                if (full.lo < 0.0 && full.hi > 0.0) {
                    for (Interval piece : {Interval::bounds(full.lo, 0.0),
                                           Interval::bounds(0.0, full.hi)}) {
                        LogBox nb = partial;
                        nb.iv.push_back(piece);
                        next.push_back(std::move(nb));
                    }
                } else {
                    LogBox nb = partial;
                    nb.iv.push_back(full);
                    next.push_back(std::move(nb));
                }
            }
            seeds = std::move(next);
        }
        for (auto& s : seeds) queue.push_back(std::move(s));
    }

    auto started = std::chrono::steady_clock::now();
    auto expired = [&]() {
        if (deadline_seconds <= 0.0) return false;
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
        return dt.count() > deadline_seconds;
    };

    using P = cover_detail::FloatPolicy;
    while (!queue.empty()) {
        LogBox box = std::move(queue.front());
        queue.pop_front();
        if (expired()) {
            CoverLeaf leaf;
            leaf.box = std::move(box);
            leaf.verdict = LeafVerdict::Unresolved;
            cert.leaves.push_back(std::move(leaf));
            cert.deadline_hit = true;
            continue;
        }
        BoxClass cls = kzs_classify(n, box);
        if (cls == BoxClass::Outside) {
            CoverLeaf leaf;
            leaf.box = std::move(box);
            leaf.verdict = LeafVerdict::OutsideRegion;
            cert.leaves.push_back(std::move(leaf));
            continue;
        }
        bool covered = false;
        auto fbox = cover_detail::box_of<P>(box);
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            if (cover_detail::region_covers_impl<P>(n, all_terms[ci], fbox)) {
                CoverLeaf leaf;
                leaf.box = box;
                leaf.verdict = LeafVerdict::Covered;
                leaf.composition = comps[ci].parts;
                cert.leaves.push_back(std::move(leaf));
                covered = true;
                break;
            }
        }
        if (covered) continue;
        if (box.max_width() > min_width) {
            // bisect the widest coordinate (smallest index on ties)
            std::size_t split = 0;
            double w = -1.0;
            for (std::size_t j = 0; j < box.iv.size(); ++j) {
                double wj = box.iv[j].hi - box.iv[j].lo;
                if (wj > w) { w = wj; split = j; }
            }
            double mid = 0.5 * (box.iv[split].lo + box.iv[split].hi);
            LogBox left = box, right = box;
            left.iv[split] = Interval::bounds(box.iv[split].lo, mid);
            right.iv[split] = Interval::bounds(mid, box.iv[split].hi);
            queue.push_back(std::move(left));
            queue.push_back(std::move(right));
        } else {
            CoverLeaf leaf;
            leaf.box = std::move(box);
            leaf.verdict = LeafVerdict::Unresolved;
            cert.leaves.push_back(std::move(leaf));
        }
    }

    cert.covered = true;
    for (const auto& leaf : cert.leaves)
        if (leaf.verdict == LeafVerdict::Unresolved) cert.covered = false;
    return cert;
}

// ------- independent certificate re-validation -------

struct CertCheckReport {
    bool partition_ok = false;
    std::size_t covered_leaves = 0;
    std::size_t outside_leaves = 0;
    std::size_t unresolved_leaves = 0;
    std::size_t points_checked = 0;
    std::size_t violations = 0;
    std::size_t exact_rechecked = 0;
    std::size_t exact_failures = 0;
    bool ok() const { return partition_ok && violations == 0 && exact_failures == 0; }
};

// Samples points in covered leaves and checks the conditions pointwise with
// outward-rounded arithmetic (a violation is counted only when proven); checks
// that sampled points of outside leaves provably fail a region constraint or
// sit on its boundary; optionally re-verifies a deterministic slice of covered
// leaves in exact rational arithmetic.
inline CertCheckReport check_certificate(const CoverCertificate& cert, const GammaTable& gammas,
                                         std::size_t samples_per_leaf = 10000,
                                         std::uint64_t seed = 1,
                                         double exact_fraction = 0.0) {
    int n = cert.dim;
    CertCheckReport rep;
    // leaves partition the initial box (volume check; construction is exact bisection)
    if (n >= 2) {
        InitialBounds init = initial_bounds(n);
        double total = 0.0;
        for (const auto& leaf : cert.leaves) total += leaf.box.volume();
        double root = init.box.volume();
        rep.partition_ok = std::fabs(total - root) <= 1e-12 * std::max(root, 1.0);
    } else {
        rep.partition_ok = true;
    }

    bool alternate = cert.variant == "alternate";
    auto comps = compositions(n);
    Rng rng(seed, 0xce27);
    using P = cover_detail::FloatPolicy;
    auto constraints = cover_detail::region_constraints(n);
    Interval l43 = iv::log_4_3();
    Interval l32 = iv::log_3_2();

    std::size_t covered_idx = 0;
    std::size_t exact_stride =
        exact_fraction > 0.0 ? static_cast<std::size_t>(std::llround(1.0 / exact_fraction)) : 0;

    for (const auto& leaf : cert.leaves) {
        if (leaf.verdict == LeafVerdict::Unresolved) {
            ++rep.unresolved_leaves;
            continue;
        }
        if (leaf.verdict == LeafVerdict::OutsideRegion) {
            ++rep.outside_leaves;
            for (std::size_t s = 0; s < samples_per_leaf; ++s) {
                LogBox pt;
                pt.iv.resize(leaf.box.iv.size());
                for (std::size_t j = 0; j < leaf.box.iv.size(); ++j) {
                    double v = rng.uniform(leaf.box.iv[j].lo, leaf.box.iv[j].hi);
                    pt.iv[j] = Interval::exact(v);
                }
                ++rep.points_checked;
                // violation: the point provably satisfies every constraint strictly
                bool strictly_inside = true;
                auto b = cover_detail::box_of<P>(pt);
                for (const auto& c : constraints) {
                    Interval v = cover_detail::eval_lin<P>(c.lin, b);
                    if (c.log_const == 1) v = iv::add(v, l43);
                    if (c.log_const == 2) v = iv::add(v, l32);
                    if (!(v.lo > 0.0)) { strictly_inside = false; break; }
                }
                if (strictly_inside) ++rep.violations;
            }
            continue;
        }
        ++rep.covered_leaves;
        ++covered_idx;
        Composition comp{leaf.composition};
        auto terms = cover_detail::build_terms(n, comp, gammas, alternate);
        for (std::size_t s = 0; s < samples_per_leaf; ++s) {
            LogBox pt;
            pt.iv.resize(leaf.box.iv.size());
            for (std::size_t j = 0; j < leaf.box.iv.size(); ++j) {
                double v = rng.uniform(leaf.box.iv[j].lo, leaf.box.iv[j].hi);
                pt.iv[j] = Interval::exact(v);
            }
            ++rep.points_checked;
            auto b = cover_detail::box_of<P>(pt);
            // proven violation: admissibility certainly fails or the sum is
            // certainly above n/4
            bool proven_bad = false;
            for (const auto& t : terms) {
                auto l = cover_detail::eval_lin<P>(t.lhyp, b);
                Interval lhs = iv::mul_scalar(iv::exp(Interval::exact(l.hi)), 4.0);
                double rhs_lo = t.exact_pow
                                    ? iv::down(static_cast<double>(t.num) /
                                               static_cast<double>(t.den))
                                    : iv::down(t.approx_pow);
                if (lhs.hi < rhs_lo) { proven_bad = true; break; }
            }
            if (!proven_bad) {
                Interval sum = Interval::exact(0.0);
                for (const auto& t : terms) {
                    Interval e1 = iv::exp(cover_detail::eval_lin<P>(t.l1, b));
                    Interval e2 = iv::exp(cover_detail::eval_lin<P>(t.l2, b));
                    Interval c = cover_detail::term_constant<P>(t);
                    sum = iv::add(sum, iv::sub(e1, iv::mul(c, e2)));
                }
                if (sum.lo > static_cast<double>(n) / 4.0) proven_bad = true;
            }
            if (proven_bad) ++rep.violations;
        }
        if (exact_stride && covered_idx % exact_stride == 0 && !alternate) {
            ++rep.exact_rechecked;
            if (!region_covers_exact(comp, leaf.box, gammas)) ++rep.exact_failures;
        }
    }
    return rep;
}

} // namespace gon
