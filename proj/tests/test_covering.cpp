#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gon/covering.hpp"
#include "gon/stability.hpp"
#include "helpers.hpp"

using namespace gon;
using namespace testutil;

TEST_CASE("covering radius of Z^n is sqrt(n)/2") {
    for (std::size_t n = 1; n <= 4; ++n) {
        if (n == 1) continue; // Lattice requires n >= 1; covrad(Z^1) covered below
        CoveringRadius cr = covering_radius(zn(n), 1e-5);
        CHECK(cr.value == doctest::Approx(std::sqrt(double(n)) / 2.0).epsilon(2e-5));
    }
    CoveringRadius c6 = covering_radius(zn(6), 1e-3);
    CHECK(c6.value == doctest::Approx(std::sqrt(6.0) / 2.0).epsilon(2e-3));
    // deep hole of Z^2 is the cell center modulo the lattice
    CoveringRadius c2 = covering_radius(zn(2), 1e-6);
    double fx = c2.deep_hole[0] - std::floor(c2.deep_hole[0]);
    double fy = c2.deep_hole[1] - std::floor(c2.deep_hole[1]);
    CHECK(fx == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(fy == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("covering radius of the stretched rectangle") {
    CoveringRadius cr = covering_radius(diag_lattice({0.5, 2.0}), 1e-6);
    CHECK(cr.value == doctest::Approx(std::sqrt(17.0) / 4.0).epsilon(1e-5));
}

TEST_CASE("hexagonal 2D lattice matches a fine-grid deep-hole search") {
    // unimodular hexagonal basis
    double s = std::pow(3.0 / 4.0, -0.25); // scales det sqrt(3)/2 to 1
    Lattice hex = Lattice::from_rows({{s, 0.0}, {0.5 * s, 0.5 * std::sqrt(3.0) * s}});
    CoveringRadius cr = covering_radius(hex, 1e-5);
    Mat red = lll_rows(hex.basis);
    double grid_best = 0.0;
    for (int i = 0; i <= 60; ++i)
        for (int j = 0; j <= 60; ++j) {
            Vec p(2, 0.0);
            axpy(p, i / 60.0, red[0]);
            axpy(p, j / 60.0, red[1]);
            grid_best = std::max(grid_best, closest_vector(hex, p).distance);
        }
    CHECK(cr.value >= grid_best - 1e-5);
    CHECK(cr.value <= grid_best + 0.05); // grid is coarse; BnB is certified
    // known value: circumradius of the equilateral triangle cell
    double expect = s / std::sqrt(3.0);
    CHECK(cr.value == doctest::Approx(expect).epsilon(1e-4));
}

TEST_CASE("covering radius caps") {
    CHECK_THROWS_AS(covering_radius(zn(7), 1e-3), CapExceededError);
    CHECK_THROWS_AS(covering_radius(zn(2), 1e-9), ValidationError);
}

TEST_CASE("woods_bound hand-evaluated cases") {
    double g2 = std::pow(4.0 / 3.0, 0.25);
    auto b1 = woods_bound(1.0, 1.0, 1, g2);
    REQUIRE(b1.has_value());
    CHECK(*b1 == doctest::Approx(0.25).epsilon(1e-12));

    // covolume 2 in one dimension fails the admissibility test (2 < 2*(4/3)^{1/2});
    // the raw formula still evaluates to 13/16
    CHECK_FALSE(woods_bound(1.0, 2.0, 1, g2).has_value());
    CHECK(woods_bound_value(1.0, 2.0, 1, g2) == doctest::Approx(13.0 / 16.0).epsilon(1e-12));

    double g5 = std::pow(8.0, 0.1);
    CHECK_FALSE(woods_bound(1.0, 1.0, 4, g5).has_value());

    CHECK_THROWS_AS(woods_bound(-1.0, 1.0, 1, g2), ValidationError);
}

TEST_CASE("composition_bound on the Z^4 profile") {
    GammaTable g = GammaTable::exact_defaults();
    Vec ones(4, 1.0);
    auto b = composition_bound(ones, {1, 1, 1, 1}, g);
    REQUIRE(b.has_value());
    CHECK(*b == 1.0); // exact: covrad^2(Z^4)

    CHECK_FALSE(composition_bound(ones, {4}, g).has_value());

    Vec big = {10.0, 1.0, 1.0, 0.01};
    auto whole = composition_bound(big, {4}, g);
    if (whole) CHECK(*whole <= big[0] * big[0]);

    CHECK_THROWS_AS(composition_bound(ones, {2, 3}, g), ValidationError);
}

TEST_CASE("composition bound is sound against the certified covering radius") {
    GammaTable g = GammaTable::exact_defaults();
    Rng rng(181);
    int applicable = 0;
    for (int iter = 0; iter < 12; ++iter) {
        std::size_t n = (iter % 2 == 0) ? 3 : 4;
        Lattice x = random_unimodular(rng, n);
        KZProfile prof = kz_reduce(x);
        double cr = covering_radius(x, 1e-4).value;
        std::vector<std::vector<int>> parts_list;
        if (n == 3) parts_list = {{1, 1, 1}, {1, 2}, {2, 1}, {3}};
        else parts_list = {{1, 1, 1, 1}, {1, 1, 2}, {2, 2}, {1, 3}, {3, 1}, {4}, {2, 1, 1}, {1, 2, 1}};
        for (const auto& parts : parts_list) {
            auto b = composition_bound(prof.coefficients, parts, g);
            if (!b) continue;
            ++applicable;
            CHECK(cr * cr <= *b + 1e-6);
        }
    }
    CHECK(applicable > 0);
}

TEST_CASE("decomposition inequality on coordinate splits") {
    Lattice z4 = zn(4);
    SublatticeWitness w = saturate(z4, {z4.basis[0], z4.basis[1]});
    DecompositionCheck dc = decomposition_check(z4, w, 1e-4);
    CHECK(dc.lhs <= dc.rhs + 2e-4);
    CHECK(dc.lhs == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(dc.rhs == doctest::Approx(1.0).epsilon(2e-3));

    Lattice d = diag_lattice({0.5, 2.0});
    SublatticeWitness wd = saturate(d, {d.basis[0]});
    DecompositionCheck dd = decomposition_check(d, wd, 1e-4);
    CHECK(dd.lhs == doctest::Approx(17.0 / 16.0).epsilon(1e-3));
    CHECK(dd.rhs == doctest::Approx(1.0 / 16.0 + 1.0).epsilon(2e-3));
    CHECK(dd.lhs <= dd.rhs + 2e-4);
}

TEST_CASE("decomposition inequality on random 4D splits") {
    Rng rng(191);
    for (int iter = 0; iter < 6; ++iter) {
        Lattice x = random_unimodular(rng, 4);
        Mat red = lll_rows(x.basis);
        SublatticeWitness w = saturate(x, {red[0], red[1]});
        if (w.rank != 2) continue;
        DecompositionCheck dc = decomposition_check(x, w, 1e-3);
        CHECK(dc.lhs <= dc.rhs + 2e-3);
    }
}

TEST_CASE("product form bound") {
    CHECK(product_form_bound(zn(2)) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(product_form_bound(zn(3)) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(product_form_bound(zn(4)) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("product form bound under distortion exceeds the cube bound") {
    double v = product_form_bound(diag_lattice({0.5, 2.0}));
    CHECK(v == doctest::Approx(17.0 / 32.0).epsilon(1e-4));
    CHECK(v > 0.25);
}

TEST_CASE("gamma table: exact entries below the Minkowski fallback") {
    GammaTable g = GammaTable::exact_defaults();
    for (int d = 1; d <= 8; ++d) {
        CHECK(g.value(d) >= 1.0);
        CHECK(g.value(d) <= GammaTable::minkowski_bound(d) + 1e-12);
        CHECK(g.get(d).provenance == GammaProvenance::known_exact);
    }
    CHECK(g.get(9).provenance == GammaProvenance::minkowski_fallback);
    CHECK(g.value(2) == doctest::Approx(1.07456993182354).epsilon(1e-12));
    // fallback formula: 2 * V_d^{-1/d}
    CHECK(g.value(9) ==
          doctest::Approx(2.0 * std::pow(ball_volume(9), -1.0 / 9.0)).epsilon(1e-14));
}

TEST_CASE("alternate bound variant evaluates the first-power reading") {
    GammaTable g = GammaTable::exact_defaults();
    Vec ones(4, 1.0);
    auto std_bound = composition_bound(ones, {1, 1, 1, 1}, g, BoundVariant::standard);
    auto alt_bound = composition_bound(ones, {1, 1, 1, 1}, g, BoundVariant::alternate);
    REQUIRE(std_bound.has_value());
    REQUIRE(alt_bound.has_value());
    // alternate denominator gamma^{n_i+1} instead of gamma^{2n_i+2}
    double term_alt = 1.0 - 1.0 / std::sqrt(4.0 / 3.0);
    CHECK(*alt_bound == doctest::Approx(4.0 * term_alt).epsilon(1e-12));
    CHECK(*std_bound == 1.0);
}
