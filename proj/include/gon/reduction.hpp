#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "gon/enumerate.hpp"
#include "gon/intlinalg.hpp"
#include "gon/lattice.hpp"
#include "gon/linalg.hpp"

namespace gon {

// Diagonal Korkine-Zolotarev data: A_i is the length of the projection of the
// i-th reduced vector orthogonal to its predecessors.
struct KZProfile {
    Vec coefficients;  // A_1..A_n
    Mat reduced_basis; // rows, a basis of the input lattice
};

namespace detail {

inline void check_enum_dim(std::size_t n) {
    if (n > kEnumDimCap)
        throw CapExceededError("exact enumeration is capped at dimension " +
                               std::to_string(kEnumDimCap));
}

} // namespace detail

// LLL reduction; returns rows U*B for a unimodular integer U, so the output
// generates the same lattice.
inline Mat lll_rows(const Mat& basis, double delta = 0.99) {
    std::size_t n = basis.size();
    std::vector<std::vector<long long>> u(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    Mat b = basis;

    auto refresh = [&](GramSchmidt& g) { g = gram_schmidt(b); };
    GramSchmidt g = gram_schmidt(b);

    std::size_t k = 1;
    std::size_t guard = 0;
    const std::size_t guard_max = 1000000;
    while (k < n) {
        if (++guard > guard_max) throw std::runtime_error("lll: iteration guard tripped");
        // size-reduce b_k against b_{k-1}..b_0
        for (std::size_t j = k; j-- > 0;) {
            long long q = llround(g.mu[k][j]);
            if (q != 0) {
                for (std::size_t t = 0; t < n; ++t) {
                    b[k][t] -= static_cast<double>(q) * b[j][t];
                    u[k][t] -= q * u[j][t];
                }
                refresh(g);
            }
        }
        double lhs = g.lengths_sq[k];
        double rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.lengths_sq[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            std::swap(u[k], u[k - 1]);
            refresh(g);
            k = k > 1 ? k - 1 : 1;
        }
    }
    // rebuild rows from the exact integer transform to pin the lattice identity
    Mat out(n, Vec(basis[0].size(), 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (u[i][j] != 0) axpy(out[i], static_cast<double>(u[i][j]), basis[j]);
    return out;
}

inline Lattice lll_reduce(const Lattice& x, double delta = 0.99) {
    if (!(delta > 0.25 && delta < 1.0))
        throw ValidationError("lll_reduce: delta must lie in (0.25, 1)");
    Lattice out = x;
    out.basis = lll_rows(x.basis, delta);
    out.rational = false; // reduced rows are reported in float form
    out.rbasis.clear();
    return out;
}

struct ShortestVector {
    Vec vector;
    double length = 0.0;
    Coeffs coeffs; // w.r.t. the internally reduced basis (deterministic)
};

inline ShortestVector shortest_vector(const Lattice& x) {
    detail::check_enum_dim(x.dim);
    Mat red = lll_rows(x.basis);
    EnumResult r = shortest_vector_enum(red);
    ShortestVector s;
    s.vector = r.vector;
    s.length = std::sqrt(r.norm_sq);
    s.coeffs = r.coeffs;
    return s;
}

struct ClosestVector {
    Vec vector;
    double distance = 0.0;
};

inline ClosestVector closest_vector(const Lattice& x, const Vec& target) {
    detail::check_enum_dim(x.dim);
    if (target.size() != x.dim)
        throw ValidationError("closest_vector: target dimension mismatch");
    Mat red = lll_rows(x.basis);
    EnumResult r = closest_vector_enum(red, target);
    ClosestVector c;
    c.vector = r.vector;
    c.distance = std::sqrt(r.norm_sq);
    return c;
}

// Distance helper used by the covering-radius search (basis pre-reduced).
inline double lattice_distance(const Mat& reduced_rows, const Vec& target) {
    return std::sqrt(closest_vector_enum(reduced_rows, target).norm_sq);
}

// Korkine-Zolotarev reduction. Step i picks the lattice vector whose
// projection orthogonal to the first i-1 reduced vectors is shortest; ties go
// to the lexicographically smallest coefficient vector, which pins the output
// without affecting the A_i.
inline KZProfile kz_reduce(const Lattice& x) {
    detail::check_enum_dim(x.dim);
    std::size_t n = x.dim;
    Mat work = lll_rows(x.basis);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        // projected basis: rows i..n-1 orthogonal to span(work[0..i-1])
        Mat head(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(i));
        Mat q = orthonormalized(head);
        Mat proj;
        for (std::size_t j = i; j < n; ++j) proj.push_back(project_out(work[j], q));
        EnumResult sv = shortest_vector_enum(proj);
        // rebuild the tail block so its first row realizes the minimizer
        IntVec c(n - i);
        for (std::size_t j = 0; j < n - i; ++j) c[j] = BigInt(sv.coeffs[j]);
        IntMat m = unimodular_completion(c);
        Mat tail(work.begin() + static_cast<std::ptrdiff_t>(i), work.end());
        for (std::size_t r = 0; r < n - i; ++r) {
            Vec row(work[0].size(), 0.0);
            for (std::size_t j = 0; j < n - i; ++j)
                if (!m[r][j].is_zero()) axpy(row, m[r][j].to_double(), tail[j]);
            work[i + r] = std::move(row);
        }
    }
    GramSchmidt g = gram_schmidt(work);
    KZProfile prof;
    prof.reduced_basis = work;
    prof.coefficients.resize(n);
    for (std::size_t i = 0; i < n; ++i) prof.coefficients[i] = std::sqrt(g.lengths_sq[i]);
    return prof;
}

} // namespace gon
