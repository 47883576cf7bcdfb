#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gon/enumerate.hpp"
#include "gon/intlinalg.hpp"
#include "gon/linalg.hpp"

namespace gon {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MembershipError : ValidationError {
    using ValidationError::ValidationError;
};

// Full-rank lattice in R^n given by an ordered basis (rows). The float basis
// is always populated; exact rational entries ride along in rational mode.
struct Lattice {
    std::size_t dim = 0;
    Mat basis;
    bool rational = false;
    RatMat rbasis;

    static Lattice from_rows(Mat rows) {
        Lattice x;
        x.dim = rows.size();
        x.basis = std::move(rows);
        x.validate();
        return x;
    }

    static Lattice from_rational_rows(RatMat rows) {
        Lattice x;
        x.dim = rows.size();
        x.rational = true;
        x.rbasis = std::move(rows);
        x.basis.assign(x.dim, Vec(x.dim, 0.0));
        for (std::size_t i = 0; i < x.dim; ++i)
            for (std::size_t j = 0; j < x.dim; ++j)
                x.basis[i][j] = x.rbasis[i][j].to_double();
        x.validate();
        return x;
    }

    void validate() const {
        if (dim == 0) throw ValidationError("lattice: empty basis");
        if (basis.size() != dim) throw ValidationError("lattice: basis must have dim rows");
        for (const auto& row : basis)
            if (row.size() != dim)
                throw ValidationError("lattice: basis rows must have length dim");
        double d = mat_det(basis);
        if (!(std::fabs(d) > 1e-12))
            throw ValidationError("lattice: basis is singular");
        if (rational) {
            Rational rd = rat_det(rbasis);
            if (rd.is_zero()) throw ValidationError("lattice: rational basis is singular");
        }
    }

    double det_abs() const { return std::fabs(mat_det(basis)); }
    Rational det_rational() const { return rat_det(rbasis).abs(); }

    bool is_unimodular(double tol = 1e-9) const {
        if (rational) return det_rational() == Rational(1);
        return std::fabs(det_abs() - 1.0) <= tol;
    }
};

// Rank-k subgroup of an ambient lattice, carried with its integer coefficient
// matrix (rows, w.r.t. the ambient basis) and covolume in its span.
struct SublatticeWitness {
    std::size_t rank = 0;
    Mat generators;   // rank x n
    IntMat coeffs;    // rank x n
    double covolume = 0.0;
};

inline double covolume_of_rows(const Mat& rows) {
    double g = gram_det(rows);
    if (!(g > 0.0)) {
        // locate the offending generator for the error message
        Mat probe;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            probe.push_back(rows[i]);
            if (!(gram_det(probe) > 1e-20)) throw RankDeficiencyError(i);
        }
        throw RankDeficiencyError(rows.size() - 1);
    }
    return std::sqrt(g);
}

// Integer coefficients of v w.r.t. the lattice basis; MembershipError if v is
// not within tolerance of a lattice point (1e-6 on coefficients in float mode).
inline IntVec coefficients_in(const Lattice& x, const Vec& v, double tol = 1e-6) {
    Vec c = solve_left(x.basis, v);
    IntVec out(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i) {
        double r = std::round(c[i]);
        if (std::fabs(c[i] - r) > tol)
            throw MembershipError("vector is not a lattice member (coefficient " +
                                  std::to_string(i) + " off by " +
                                  std::to_string(std::fabs(c[i] - r)) + ")");
        out[i] = BigInt(static_cast<std::int64_t>(llround(r)));
    }
    if (x.rational) {
        RatVec rv(x.dim);
        for (std::size_t i = 0; i < x.dim; ++i) rv[i] = Rational::from_double(v[i]);
        RatVec rc = rat_solve_left(x.rbasis, rv);
        for (std::size_t i = 0; i < x.dim; ++i)
            if (!rc[i].is_integer())
                throw MembershipError("vector is not a lattice member (exact check)");
    }
    return out;
}

inline Mat coeff_rows_to_vectors(const IntMat& coeffs, const Mat& basis) {
    Mat rows;
    rows.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        Vec v(basis[0].size(), 0.0);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (!c[j].is_zero()) axpy(v, c[j].to_double(), basis[j]);
        rows.push_back(std::move(v));
    }
    return rows;
}

inline SublatticeWitness make_witness(const Lattice& x, IntMat coeffs) {
    SublatticeWitness w;
    w.coeffs = hnf(std::move(coeffs));
    w.rank = w.coeffs.size();
    w.generators = coeff_rows_to_vectors(w.coeffs, x.basis);
    w.covolume = covolume_of_rows(w.generators);
    return w;
}

inline SublatticeWitness make_witness_from_vectors(const Lattice& x, const Mat& gens) {
    IntMat coeffs;
    for (const auto& g : gens) coeffs.push_back(coefficients_in(x, g));
    return make_witness(x, std::move(coeffs));
}

// Primitive closure x cap span(generators).
inline SublatticeWitness saturate(const Lattice& x, const Mat& generators) {
    IntMat coeffs;
    for (const auto& g : generators) coeffs.push_back(coefficients_in(x, g));
    return make_witness(x, int_saturate(coeffs));
}

inline SublatticeWitness saturate_coeffs(const Lattice& x, const IntMat& coeffs) {
    return make_witness(x, int_saturate(coeffs));
}

inline bool is_primitive(const SublatticeWitness& w) {
    return int_saturate(w.coeffs) == hnf(w.coeffs);
}

// Extends the (primitive) coefficient module of w to a unimodular matrix whose
// first rank rows span the module.
inline IntMat extend_to_unimodular(const IntMat& coeffs_hnf) {
    std::size_t n = coeffs_hnf.empty() ? 0 : coeffs_hnf[0].size();
    std::size_t r = coeffs_hnf.size();
    if (r == 0) return int_identity(n);
    IntMat w1 = unimodular_completion(coeffs_hnf[0]); // first row = first generator
    if (r == 1) return w1;
    // rewrite remaining generators in the w1 coordinate system
    RatMat w1q(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w1q[i][j] = Rational(w1[i][j]);
    IntMat rest;
    for (std::size_t i = 1; i < r; ++i) {
        RatVec rhs(n);
        for (std::size_t j = 0; j < n; ++j) rhs[j] = Rational(coeffs_hnf[i][j]);
        RatVec z = rat_solve_left(w1q, rhs);
        IntVec zi(n - 1);
        for (std::size_t j = 1; j < n; ++j) {
            if (!z[j].is_integer())
                throw std::logic_error("extend_to_unimodular: non-integer coordinates");
            zi[j - 1] = z[j].num();
        }
        rest.push_back(std::move(zi));
    }
    IntMat sub = extend_to_unimodular(hnf(rest)); // (n-1) x (n-1)
    // assemble in z-coordinates: first row e_1, then rows (0 | sub)
    IntMat assembled;
    assembled.push_back(IntVec(n, BigInt(0)));
    assembled[0][0] = BigInt(1);
    for (const auto& row : sub) {
        IntVec full(n, BigInt(0));
        for (std::size_t j = 0; j + 1 < n; ++j) full[j + 1] = row[j];
        assembled.push_back(std::move(full));
    }
    IntMat m = int_mul(assembled, w1);
    // first r rows must regenerate the module; rows 1..r-1 of assembled*w1 may
    // differ from coeffs_hnf by row operations within the module, which is fine,
    // but we splice the original generators back in for determinism.
    for (std::size_t i = 0; i < r; ++i) m[i] = coeffs_hnf[i];
    return m;
}

// Orthonormal basis of the complement of span(rows), expressed as coordinates
// so results live in R^(n-r).
struct ComplementFrame {
    Mat q; // (n-r) x n orthonormal rows spanning the complement
};

inline ComplementFrame complement_frame(const Mat& span_rows, std::size_t n) {
    Mat q = orthonormalized(span_rows);
    ComplementFrame f;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0.0);
        e[i] = 1.0;
        Vec p = project_out(e, q);
        for (const auto& prev : f.q) axpy(p, -dot(p, prev), prev);
        double nn = norm(p);
        if (nn > 1e-9) f.q.push_back(scaled(p, 1.0 / nn));
        if (f.q.size() == n - span_rows.size()) break;
    }
    if (f.q.size() != n - span_rows.size())
        throw std::logic_error("complement_frame: failed to build complement");
    return f;
}

// Projection of x onto span(w)^perp, returned in complement coordinates as a
// full-rank lattice of dimension n - rank. Requires w primitive.
inline Lattice project_complement(const Lattice& x, const SublatticeWitness& w) {
    if (!is_primitive(w))
        throw ValidationError("project_complement: subgroup is not primitive; saturate first");
    std::size_t n = x.dim, r = w.rank;
    IntMat full = extend_to_unimodular(w.coeffs);
    Mat rows = coeff_rows_to_vectors(full, x.basis);
    Mat span(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(r));
    ComplementFrame f = complement_frame(span, n);
    Mat span_ortho = orthonormalized(span);
    Mat proj_basis;
    for (std::size_t i = r; i < n; ++i) {
        Vec p = project_out(rows[i], span_ortho);
        Vec coords(n - r);
        for (std::size_t j = 0; j < n - r; ++j) coords[j] = dot(p, f.q[j]);
        proj_basis.push_back(std::move(coords));
    }
    return Lattice::from_rows(std::move(proj_basis));
}

// Lower block-triangular composition: blocks on the diagonal, fills[i] below
// for block i >= 1 (dims n_i x (n_1+...+n_i)).
inline Lattice block_compose(const std::vector<Lattice>& blocks,
                             const std::vector<Mat>& fills) {
    if (blocks.empty()) throw ValidationError("block_compose: no blocks");
    if (fills.size() + 1 != blocks.size())
        throw ValidationError("block_compose: need one fill per block after the first");
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.is_unimodular())
            throw ValidationError("block_compose: blocks must be unimodular");
        n += b.dim;
    }
    Mat rows(n, Vec(n, 0.0));
    std::size_t off = 0;
    bool all_rational = true;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const Lattice& b = blocks[bi];
        all_rational = all_rational && b.rational;
        if (bi > 0) {
            const Mat& f = fills[bi - 1];
            if (f.size() != b.dim)
                throw ValidationError("block_compose: fill row count mismatch");
            for (std::size_t i = 0; i < b.dim; ++i) {
                if (f[i].size() != off)
                    throw ValidationError("block_compose: fill column count mismatch");
                for (std::size_t j = 0; j < off; ++j) rows[off + i][j] = f[i][j];
            }
        }
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) rows[off + i][off + j] = b.basis[i][j];
        off += b.dim;
    }
    if (all_rational) {
        RatMat rrows(n, RatVec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rrows[i][j] = Rational::from_double(rows[i][j]);
        std::size_t o = 0;
        for (const auto& b : blocks) {
            for (std::size_t i = 0; i < b.dim; ++i)
                for (std::size_t j = 0; j < b.dim; ++j) rrows[o + i][o + j] = b.rbasis[i][j];
            o += b.dim;
        }
        return Lattice::from_rational_rows(std::move(rrows));
    }
    return Lattice::from_rows(std::move(rows));
}

// Sum of two subgroups (by stacked coefficient rows) and exact intersection
// (integer kernel of the stacked coefficient matrix).
inline SublatticeWitness subgroup_sum(const Lattice& x, const SublatticeWitness& a,
                                      const SublatticeWitness& b) {
    IntMat stacked = a.coeffs;
    for (const auto& row : b.coeffs) stacked.push_back(row);
    IntMat h = hnf(stacked);
    return make_witness(x, std::move(h));
}

// Intersection; empty coefficient matrix means {0} (covolume convention 1).
inline SublatticeWitness subgroup_intersection(const Lattice& x, const SublatticeWitness& a,
                                               const SublatticeWitness& b) {
    std::size_t ra = a.rank, rb = b.rank;
    IntMat d;
    for (std::size_t i = 0; i < ra; ++i) d.push_back(a.coeffs[i]);
    for (std::size_t i = 0; i < rb; ++i) {
        IntVec neg(b.coeffs[i].size());
        for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -b.coeffs[i][j];
        d.push_back(std::move(neg));
    }
    // left kernel rows z = (u, v) with u*A = v*B; intersection basis = u*A
    IntMat z = int_right_kernel(int_transpose(d));
    IntMat inter;
    for (const auto& row : z) {
        IntVec u(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(ra));
        IntVec combo(x.dim, BigInt(0));
        for (std::size_t i = 0; i < ra; ++i)
            for (std::size_t j = 0; j < x.dim; ++j) combo[j] += u[i] * a.coeffs[i][j];
        bool zero = true;
        for (const auto& v : combo) zero = zero && v.is_zero();
        if (!zero) inter.push_back(std::move(combo));
    }
    if (inter.empty()) {
        SublatticeWitness w;
        w.rank = 0;
        w.covolume = 1.0; // convention for the trivial subgroup
        return w;
    }
    return make_witness(x, hnf(inter));
}

// Exact squared covolume for rational-mode ambient lattices.
inline Rational covolume_sq_exact(const Lattice& x, const IntMat& coeffs) {
    std::size_t r = coeffs.size();
    RatMat gens(r, RatVec(x.dim, Rational(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < x.dim; ++j)
            if (!coeffs[i][j].is_zero())
                for (std::size_t k = 0; k < x.dim; ++k)
                    gens[i][k] += Rational(coeffs[i][j]) * x.rbasis[j][k];
    RatMat gram(r, RatVec(r, Rational(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < x.dim; ++k)
                gram[i][j] += gens[i][k] * gens[j][k];
    return rat_det(gram);
}

} // namespace gon
