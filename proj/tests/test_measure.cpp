#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gon/measure.hpp"
#include "gon/sampling.hpp"
#include "helpers.hpp"

using namespace gon;
using namespace testutil;

namespace {
const double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("zeta convention and classical values") {
    CHECK(zeta(1.0) == 1.0);
    CHECK(zeta(2.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
    CHECK(zeta(4.0) == doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-13));
    CHECK_THROWS_AS(zeta(0.5), std::invalid_argument);
}

TEST_CASE("ball volumes") {
    CHECK(ball_volume(1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(ball_volume(2) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
    CHECK(std::exp(log_ball_volume(6)) == doctest::Approx(ball_volume(6)).epsilon(1e-12));
}

TEST_CASE("rankin B values and exact symmetry") {
    // B(2,1) = R(2)/R(1) = (24/pi)/2 = 12/pi
    CHECK(rankin_b(2, 1) == doctest::Approx(12.0 / kPi).epsilon(1e-12));
    for (int n = 2; n <= 30; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            CHECK(rankin_b(n, k) > 0.0);
            CHECK(log_rankin_b(n, k) == log_rankin_b(n, n - k)); // bit-identical
        }
    // telescoped form of B(4,2)
    double telescoped = std::exp((log_rankin_r(3) - log_rankin_r(1)) +
                                 (log_rankin_r(4) - log_rankin_r(2)));
    CHECK(rankin_b(4, 2) == doctest::Approx(telescoped).epsilon(1e-12));
}

TEST_CASE("thunder values") {
    CHECK(thunder_value(2, 1, 1.0) == doctest::Approx(6.0 / kPi).epsilon(1e-12));
    CHECK(thunder_value(2, 1, 0.5) == doctest::Approx(6.0 / kPi * 0.25).epsilon(1e-12));
    CHECK(thunder_value(2, 1, 1e-9) < 1e-17);
}

TEST_CASE("t_threshold formula") {
    for (int k = 1; k <= 3; ++k)
        CHECK(t_threshold(4, k, 4.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(t_threshold(4, 1, 1.0) == doctest::Approx(std::pow(4.0, 3.0 / 8.0)).epsilon(1e-15));
    CHECK(t_threshold(6, 2, 2.5) == doctest::Approx(t_threshold(6, 4, 2.5)).epsilon(1e-15));
}

TEST_CASE("rankin growth check over the pinned grid") {
    RankinGrowthReport rep = rankin_growth_check(10, 60, 60.0);
    CHECK(rep.max_ratio <= 1.0);
    CHECK(rep.max_ratio > 0.0);
    // monotone improving along each k-slice for n >= 20
    for (int k = 1; k <= 10; ++k)
        for (int n = 21; n <= 60; ++n) {
            if (k > n - 1 || k > (n - 1) - 1) continue;
            CHECK(rankin_growth_ratio(n, k, 60.0) <=
                  rankin_growth_ratio(n - 1, k, 60.0) * (1.0 + 1e-12));
        }
}

TEST_CASE("2D exact sampler produces unimodular lattices") {
    Rng rng(271);
    for (int i = 0; i < 200; ++i) {
        Lattice x = sample_lattice_2d(rng);
        CHECK(std::fabs(x.det_abs() - 1.0) <= 1e-12);
    }
}

TEST_CASE("nD sampler determinant and prime sanity") {
    CHECK(detail::is_prime_u64(10000019ull));
    CHECK_FALSE(detail::is_prime_u64(10000001ull));
    Rng rng(281);
    for (std::size_t n : {3, 4, 5}) {
        Lattice x = sample_lattice_nd(n, rng);
        CHECK(std::fabs(x.det_abs() - 1.0) <= 1e-9);
    }
}

TEST_CASE("two prime choices give close shortest-length distributions (K-S)") {
    Rng rng(291);
    const int N = 400;
    std::vector<double> a, b;
    for (int i = 0; i < N; ++i) a.push_back(shortest_vector(sample_lattice_nd(3, rng, 0)).length);
    for (int i = 0; i < N; ++i) b.push_back(shortest_vector(sample_lattice_nd(3, rng, 7)).length);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double ks = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i;
        else ++j;
        double fa = static_cast<double>(i) / a.size();
        double fb = static_cast<double>(j) / b.size();
        ks = std::max(ks, std::fabs(fa - fb));
    }
    CHECK(ks < 0.1); // coarse two-sample bound at N=400
}

TEST_CASE("siegel counting matches the thunder expectation at moderate samples") {
    SiegelCheckReport rep = siegel_check_2d(0.5, 20000, 31);
    CHECK(std::fabs(rep.mean_count - rep.expected) <= std::max(0.05 * rep.expected, 3.0 * rep.std_error));
}

TEST_CASE("stable fraction is identical for any worker count") {
    StableFractionReport serial = estimate_stable_fraction(3, 600, 21);
    setenv("GON_THREADS", "2", 1);
    StableFractionReport parallel = estimate_stable_fraction(3, 600, 21);
    unsetenv("GON_THREADS");
    CHECK(serial.stable_count == parallel.stable_count);
    CHECK(serial.fraction == parallel.fraction);
}

TEST_CASE("estimate_stable_fraction basics and reproducibility") {
    CHECK_THROWS_AS(estimate_stable_fraction(2, 0, 1), ValidationError);
    StableFractionReport r1 = estimate_stable_fraction(2, 2000, 77);
    StableFractionReport r2 = estimate_stable_fraction(2, 2000, 77);
    CHECK(r1.stable_count == r2.stable_count);
    CHECK(r1.sampler == "exact2d");
    // true value is about 0.045; allow a generous band at 2000 samples
    CHECK(r1.fraction > 0.01);
    CHECK(r1.fraction < 0.10);
    CHECK(r1.ci95_lo <= r1.fraction);
    CHECK(r1.ci95_hi >= r1.fraction);
}

TEST_CASE("2D stable fraction agrees with the quadrature oracle") {
    double mc = estimate_stable_fraction(2, 4000, 5).fraction;
    double quad = stable_fraction_2d_quadrature(40);
    CHECK(std::fabs(mc - quad) < 0.02);
    // closed form for reference: 1 - 3/pi
    CHECK(quad == doctest::Approx(1.0 - 3.0 / kPi).epsilon(0.01));
}

TEST_CASE("threshold fraction obeys the tail bound") {
    for (double t : {0.3, 0.5, 0.8}) {
        ThresholdFractionReport rep = threshold_fraction(2, 1, t, 3000, 13);
        CHECK(rep.complement <= rep.bound + 3.0 * rep.std_error);
    }
    ThresholdFractionReport tiny = threshold_fraction(2, 1, 1e-4, 500, 13);
    CHECK(tiny.fraction == doctest::Approx(1.0));
}
