#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gon {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>; // rows are vectors

struct RankDeficiencyError : std::runtime_error {
    std::size_t index;
    explicit RankDeficiencyError(std::size_t idx)
        : std::runtime_error("rank deficiency at generator index " + std::to_string(idx)),
          index(idx) {}
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline double norm_sq(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm_sq(a)); }

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Vec scaled(const Vec& a, double s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}
inline void axpy(Vec& y, double a, const Vec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

inline Mat mat_identity(std::size_t n) {
    Mat m(n, Vec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    Mat r(a.size(), Vec(b.empty() ? 0 : b[0].size(), 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            double f = a[i][k];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < b[k].size(); ++j) r[i][j] += f * b[k][j];
        }
    return r;
}

inline Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

struct GramSchmidt {
    Mat ortho;       // orthogonal vectors u_1..u_r
    Mat mu;          // mu[i][j] = <v_i, u_j>/<u_j, u_j>, j < i
    Vec lengths_sq;  // ||u_i||^2
};

// Classical Gram-Schmidt with one reorthogonalization pass.
// Throws RankDeficiencyError (0-based index) when a vector is dependent.
inline GramSchmidt gram_schmidt(const Mat& basis, double rel_tol = 1e-10) {
    GramSchmidt g;
    std::size_t m = basis.size();
    g.mu.assign(m, Vec(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        Vec u = basis[i];
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < i; ++j) {
                double c = dot(u, g.ortho[j]) / g.lengths_sq[j];
                if (pass == 0) g.mu[i][j] = c;
                else g.mu[i][j] += c;
                axpy(u, -c, g.ortho[j]);
            }
        }
        double ns = norm_sq(u);
        if (!(ns > rel_tol * rel_tol * norm_sq(basis[i])) || ns == 0.0)
            throw RankDeficiencyError(i);
        g.ortho.push_back(std::move(u));
        g.lengths_sq.push_back(ns);
        g.mu[i][i] = 1.0;
    }
    return g;
}

// Gram matrix determinant (squared covolume) of possibly non-square rows.
inline double gram_det(const Mat& rows) {
    std::size_t m = rows.size();
    Mat g(m, Vec(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g[i][j] = dot(rows[i], rows[j]);
    // LU with partial pivoting
    double det = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < m; ++i)
            if (std::fabs(g[i][k]) > std::fabs(g[piv][k])) piv = i;
        if (g[piv][k] == 0.0) return 0.0;
        if (piv != k) { std::swap(g[piv], g[k]); det = -det; }
        det *= g[k][k];
        for (std::size_t i = k + 1; i < m; ++i) {
            double f = g[i][k] / g[k][k];
            for (std::size_t j = k; j < m; ++j) g[i][j] -= f * g[k][j];
        }
    }
    return det;
}

inline double mat_det(const Mat& a) {
    std::size_t n = a.size();
    Mat m = a;
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(m[i][k]) > std::fabs(m[piv][k])) piv = i;
        if (m[piv][k] == 0.0) return 0.0;
        if (piv != k) { std::swap(m[piv], m[k]); det = -det; }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            double f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

// Solves x * a = b (row-vector convention), a square.
inline Vec solve_left(const Mat& a, const Vec& b) {
    std::size_t n = a.size();
    Mat m(n, Vec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[j][i];
        m[i][n] = b[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(m[i][k]) > std::fabs(m[piv][k])) piv = i;
        if (m[piv][k] == 0.0) throw std::domain_error("solve_left: singular matrix");
        std::swap(m[piv], m[k]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            double f = m[i][k] / m[k][k];
            if (f == 0.0) continue;
            for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

// Orthonormal basis of the span of rows (for projections).
inline Mat orthonormalized(const Mat& rows) {
    Mat q;
    for (const auto& r : rows) {
        Vec u = r;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& e : q) axpy(u, -dot(u, e), e);
        double nn = norm(u);
        if (nn > 1e-12) q.push_back(scaled(u, 1.0 / nn));
    }
    return q;
}

// Projects v onto the orthogonal complement of span(q), q orthonormal rows.
inline Vec project_out(Vec v, const Mat& q) {
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& e : q) axpy(v, -dot(v, e), e);
    return v;
}

} // namespace gon
