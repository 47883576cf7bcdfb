#pragma once

#include <cmath>
#include <stdexcept>

namespace gon {

// Riemann zeta on s >= 1 with the convention zeta(1) = 1.
// Direct series plus an Euler-Maclaurin tail; absolute error well below 1e-12
// for the arguments used here (s up to a few hundred costs nothing).
inline double zeta(double s) {
    if (s < 1.0) throw std::invalid_argument("zeta: s must be >= 1");
    if (s == 1.0) return 1.0;
    if (s > 60.0) return 1.0 + std::pow(2.0, -s); // already below 1e-18 of 1
    const int N = 120;
    double sum = 0.0;
    for (int k = 1; k < N; ++k) sum += std::pow(static_cast<double>(k), -s);
    double n = static_cast<double>(N);
    double tail = std::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n, -s);
    double t1 = s * std::pow(n, -s - 1.0) / 12.0;
    double t3 = -s * (s + 1.0) * (s + 2.0) * std::pow(n, -s - 3.0) / 720.0;
    return sum + tail + t1 + t3;
}

// Volume of the unit ball in R^j.
inline double ball_volume(int j) {
    if (j < 1) throw std::invalid_argument("ball_volume: j must be >= 1");
    // V_1 = 2, V_2 = pi, V_j = V_{j-2} * 2*pi/j
    double v1 = 2.0, v2 = 3.14159265358979323846264338327950288;
    if (j == 1) return v1;
    if (j == 2) return v2;
    double v = (j % 2 == 1) ? v1 : v2;
    for (int d = (j % 2 == 1) ? 3 : 4; d <= j; d += 2)
        v *= 2.0 * 3.14159265358979323846264338327950288 / static_cast<double>(d);
    return v;
}

inline double log_ball_volume(double j) {
    // V_j = pi^{j/2} / Gamma(j/2 + 1)
    return 0.5 * j * std::log(3.14159265358979323846264338327950288) -
           std::lgamma(0.5 * j + 1.0);
}

} // namespace gon
