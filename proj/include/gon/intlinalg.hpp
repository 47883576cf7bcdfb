#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gon/bigint.hpp"
#include "gon/rational.hpp"

namespace gon {

// Exact integer/rational linear algebra on small dense matrices.
// Rows are vectors throughout, matching the lattice convention.

using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>; // row-major

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

inline IntMat int_identity(std::size_t n) {
    IntMat m(n, IntVec(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = BigInt(1);
    return m;
}

inline IntMat int_transpose(const IntMat& a) {
    if (a.empty()) return {};
    IntMat t(a[0].size(), IntVec(a.size(), BigInt(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline IntMat int_mul(const IntMat& a, const IntMat& b) {
    IntMat r(a.size(), IntVec(b.empty() ? 0 : b[0].size(), BigInt(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            if (!a[i][k].is_zero())
                for (std::size_t j = 0; j < b[k].size(); ++j)
                    r[i][j] += a[i][k] * b[k][j];
    return r;
}

// Row-style Hermite normal form (row span preserved). Returns H with zero
// rows removed; pivots positive, entries above a pivot reduced into [0, pivot).
inline IntMat hnf(IntMat a) {
    std::size_t rows = a.size();
    if (rows == 0) return a;
    std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // gcd sweep in column c among rows r..end
        while (true) {
            std::size_t piv = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (!a[i][c].is_zero() &&
                    (piv == rows || a[i][c].abs() < a[piv][c].abs()))
                    piv = i;
            if (piv == rows) break; // column all zero
            std::swap(a[r], a[piv]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][c].is_zero()) continue;
                BigInt q = a[i][c] / a[r][c];
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (!a[i][c].is_zero()) done = false;
            }
            if (done) break;
        }
        if (a[r][c].is_zero()) continue;
        if (a[r][c].negative())
            for (std::size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
        // reduce rows above
        for (std::size_t i = 0; i < r; ++i) {
            BigInt q = a[i][c] / a[r][c];
            if (a[i][c].negative() && !(a[i][c] % a[r][c]).is_zero()) q -= BigInt(1);
            if (q.is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

// Right kernel of a: integer matrix K (rows = kernel basis vectors k with
// a * k^T = 0), saturated by construction.
inline IntMat int_right_kernel(const IntMat& a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    // column operations on a, mirrored on an identity; kernel = columns that
    // become zero in a. Work on the transpose with row ops instead.
    IntMat t = int_transpose(a);              // cols x rows
    IntMat u = int_identity(cols);            // tracks row ops on t
    std::size_t r = 0;
    for (std::size_t c = 0; c < rows && r < cols; ++c) {
        while (true) {
            std::size_t piv = cols;
            for (std::size_t i = r; i < cols; ++i)
                if (!t[i][c].is_zero() && (piv == cols || t[i][c].abs() < t[piv][c].abs()))
                    piv = i;
            if (piv == cols) break;
            std::swap(t[r], t[piv]);
            std::swap(u[r], u[piv]);
            bool done = true;
            for (std::size_t i = r + 1; i < cols; ++i) {
                if (t[i][c].is_zero()) continue;
                BigInt q = t[i][c] / t[r][c];
                for (std::size_t j = 0; j < rows; ++j) t[i][j] -= q * t[r][j];
                for (std::size_t j = 0; j < cols; ++j) u[i][j] -= q * u[r][j];
                if (!t[i][c].is_zero()) done = false;
            }
            if (done) break;
        }
        if (!t[r][c].is_zero()) ++r;
    }
    IntMat kernel;
    for (std::size_t i = r; i < cols; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < rows; ++j) zero = zero && t[i][j].is_zero();
        if (zero) kernel.push_back(u[i]);
    }
    return hnf(std::move(kernel));
}

// Saturation of the row module: (Q-span of rows) intersected with Z^n.
inline IntMat int_saturate(const IntMat& a) {
    if (a.empty()) return a;
    IntMat k = int_right_kernel(a);
    if (k.empty()) return int_identity(a[0].size()); // full rank span
    return int_right_kernel(k);
}

// Completes a primitive row c to a unimodular matrix whose first row is c.
inline IntMat unimodular_completion(const IntVec& c) {
    std::size_t n = c.size();
    // column ops bring c to e_1; accumulate the inverse ops on the identity.
    IntVec w = c;
    IntMat minv = int_identity(n);
    // gcd sweep across entries
    while (true) {
        std::size_t piv = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!w[j].is_zero() && (piv == n || w[j].abs() < w[piv].abs())) piv = j;
        if (piv == n) throw std::invalid_argument("unimodular_completion: zero vector");
        if (piv != 0) {
            std::swap(w[0], w[piv]);
            std::swap(minv[0], minv[piv]); // inverse of a column swap is the row swap
        }
        bool done = true;
        for (std::size_t j = 1; j < n; ++j) {
            if (w[j].is_zero()) continue;
            BigInt q = w[j] / w[0];
            w[j] -= q * w[0];
            // column op col_j -= q*col_0 has inverse row op row_0 += q*row_j
            for (std::size_t k2 = 0; k2 < n; ++k2) minv[0][k2] += q * minv[j][k2];
            if (!w[j].is_zero()) done = false;
        }
        if (done) break;
    }
    if (w[0].negative()) {
        for (std::size_t k2 = 0; k2 < n; ++k2) minv[0][k2] = -minv[0][k2];
        w[0] = -w[0];
    }
    if (!(w[0] == BigInt(1)))
        throw std::invalid_argument("unimodular_completion: vector not primitive");
    return minv; // first row equals c
}

// Determinant by fraction-free (Bareiss) elimination.
inline BigInt int_det(IntMat a) {
    std::size_t n = a.size();
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) { piv = i; break; }
            if (piv == n) return BigInt(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    BigInt d = a[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

inline Rational rat_det(RatMat a) {
    std::size_t n = a.size();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (!a[i][k].is_zero()) { piv = i; break; }
        if (piv == n) return Rational(0);
        if (piv != k) { std::swap(a[k], a[piv]); det = -det; }
        det *= a[k][k];
        Rational inv = Rational(1) / a[k][k];
        for (std::size_t j = k; j < n; ++j) a[k][j] *= inv;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rational f = a[i][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

// Solves x * a = b exactly (row-vector convention); a square nonsingular.
inline RatVec rat_solve_left(const RatMat& a, const RatVec& b) {
    std::size_t n = a.size();
    // transpose to the usual a^T x^T = b^T and run Gaussian elimination
    RatMat m(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[j][i];
        m[i][n] = b[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (!m[i][k].is_zero()) { piv = i; break; }
        if (piv == n) throw std::domain_error("rat_solve_left: singular matrix");
        std::swap(m[k], m[piv]);
        Rational inv = Rational(1) / m[k][k];
        for (std::size_t j = k; j <= n; ++j) m[k][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k].is_zero()) continue;
            Rational f = m[i][k];
            for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

inline std::size_t rat_rank(RatMat a) {
    std::size_t rows = a.size();
    if (rows == 0) return 0;
    std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace gon
