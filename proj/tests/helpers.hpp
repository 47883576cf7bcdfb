#pragma once

#include <cmath>
#include <vector>

#include "gon/lattice.hpp"
#include "gon/linalg.hpp"
#include "gon/rng.hpp"

namespace testutil {

using namespace gon;

inline Lattice zn(std::size_t n) {
    return Lattice::from_rows(mat_identity(n));
}

inline Lattice zn_rational(std::size_t n) {
    RatMat rows(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = Rational(1);
    return Lattice::from_rational_rows(std::move(rows));
}

inline Lattice diag_lattice(const Vec& d) {
    Mat rows(d.size(), Vec(d.size(), 0.0));
    for (std::size_t i = 0; i < d.size(); ++i) rows[i][i] = d[i];
    return Lattice::from_rows(std::move(rows));
}

// Random unimodular lattice: Gaussian matrix rescaled to determinant +-1.
inline Lattice random_unimodular(Rng& rng, std::size_t n) {
    while (true) {
        Mat m(n, Vec(n));
        for (auto& row : m)
            for (auto& v : row) v = rng.next_gaussian();
        double d = std::fabs(mat_det(m));
        if (d < 1e-3) continue;
        double s = std::pow(d, -1.0 / static_cast<double>(n));
        for (auto& row : m)
            for (auto& v : row) v *= s;
        return Lattice::from_rows(std::move(m));
    }
}

// Stable 2D unimodular lattice: shape parameter tau = x + iy in the classical
// fundamental domain with y <= 1 (shortest vector length y^{-1/2} >= 1), then
// a random rotation.
inline Lattice make_stable_2d(Rng& rng) {
    double x, y;
    do {
        x = rng.uniform(-0.5, 0.5);
        y = rng.uniform(std::sqrt(std::max(1.0 - x * x, 0.75)), 1.0);
    } while (x * x + y * y < 1.0);
    double s = 1.0 / std::sqrt(y);
    Mat rows = {{s, 0.0}, {x * s, y * s}};
    double th = rng.uniform(0.0, 6.283185307179586);
    double c = std::cos(th), sn = std::sin(th);
    for (auto& r : rows) {
        double a = r[0] * c - r[1] * sn;
        double b = r[0] * sn + r[1] * c;
        r = {a, b};
    }
    return Lattice::from_rows(std::move(rows));
}

// determinant by cofactor expansion (independent oracle)
inline double det_cofactor(const Mat& a) {
    std::size_t n = a.size();
    if (n == 1) return a[0][0];
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        Mat minor;
        for (std::size_t i = 1; i < n; ++i) {
            Vec row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        s += sign * a[0][j] * det_cofactor(minor);
    }
    return s;
}

// all integer vectors c in [-bound, bound]^n, first nonzero entry positive
inline std::vector<std::vector<long long>> coeff_box(std::size_t n, long long bound) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> c(n, -bound);
    while (true) {
        bool zero = true, canonical = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (c[i] != 0) {
                zero = false;
                canonical = c[i] > 0;
                break;
            }
        }
        if (!zero && canonical) out.push_back(c);
        std::size_t i = 0;
        while (i < n && c[i] == bound) c[i++] = -bound;
        if (i == n) break;
        ++c[i];
    }
    return out;
}

} // namespace testutil
