#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gon/cover_verify.hpp"
#include "gon/reduction.hpp"
#include "gon/stability.hpp"
#include "helpers.hpp"

using namespace gon;
using namespace testutil;

TEST_CASE("compositions enumerate 2^{n-1} tuples in lexicographic order") {
    auto c1 = compositions(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].parts == std::vector<int>{1});

    auto c3 = compositions(3);
    REQUIRE(c3.size() == 4);
    CHECK(c3[0].parts == std::vector<int>{1, 1, 1});
    CHECK(c3[1].parts == std::vector<int>{1, 2});
    CHECK(c3[2].parts == std::vector<int>{2, 1});
    CHECK(c3[3].parts == std::vector<int>{3});

    CHECK(compositions(7).size() == 64);
}

TEST_CASE("kzs_classify on degenerate and offset boxes") {
    // degenerate box at the all-ones profile
    LogBox zero;
    zero.iv = {Interval::exact(0.0), Interval::exact(0.0)};
    CHECK(kzs_classify(3, zero) == BoxClass::Inside);

    LogBox neg;
    neg.iv = {Interval::bounds(-0.5, -0.1), Interval::bounds(-0.1, 0.1)};
    CHECK(kzs_classify(3, neg) == BoxClass::Outside);

    LogBox straddle;
    straddle.iv = {Interval::bounds(-0.05, 0.05), Interval::bounds(-0.01, 0.01)};
    CHECK(kzs_classify(3, straddle) == BoxClass::Straddles);
}

TEST_CASE("region_covers boundary cases at the all-ones profile") {
    GammaTable g = GammaTable::exact_defaults();
    LogBox zero4;
    zero4.iv = {Interval::exact(0.0), Interval::exact(0.0), Interval::exact(0.0)};
    CHECK(region_covers(Composition{{1, 1, 1, 1}}, zero4, g));
    CHECK_FALSE(region_covers(Composition{{4}}, zero4, g));

    // any box under a composition whose block admissibility test fails
    LogBox wide;
    wide.iv = {Interval::bounds(0.0, 0.2), Interval::bounds(-0.1, 0.1),
               Interval::bounds(-0.1, 0.1)};
    CHECK_FALSE(region_covers(Composition{{4}}, wide, g));

    CHECK_THROWS_AS(region_covers(Composition{{2, 3}}, zero4, g), ValidationError);
}

TEST_CASE("initial bounds enclose sampled stable profiles (n = 2, 3)") {
    InitialBounds b2 = initial_bounds(2);
    REQUIRE(b2.box.iv.size() == 1);
    CHECK(b2.box.iv[0].lo == 0.0);
    CHECK(b2.box.iv[0].hi == doctest::Approx(std::log(4.0 / 3.0) / 4.0).epsilon(1e-12));

    // all-ones point inside for every n
    for (int n = 2; n <= 6; ++n) {
        InitialBounds ib = initial_bounds(n);
        for (const auto& ivl : ib.box.iv) {
            CHECK(ivl.lo <= 0.0);
            CHECK(ivl.hi >= 0.0);
        }
    }

    // profiles of stable 3D lattices (block construction) satisfy the
    // partial-product bounds and must land inside the initial box
    InitialBounds b3 = initial_bounds(3);
    Rng rng(251);
    int tested = 0;
    for (int iter = 0; iter < 80 && tested < 60; ++iter) {
        Lattice b2d = make_stable_2d(rng);
        Mat fill(1, Vec(2));
        fill[0][0] = rng.uniform(-0.5, 0.5);
        fill[0][1] = rng.uniform(-0.5, 0.5);
        Lattice x = block_compose({b2d, zn(1)}, {fill});
        KZProfile p = kz_reduce(x);
        if (p.coefficients[0] < 1.0) continue; // float fuzz at the boundary
        if (p.coefficients[0] * p.coefficients[1] < 1.0) continue;
        ++tested;
        double l1 = std::log(p.coefficients[0]);
        double l2 = std::log(p.coefficients[1]);
        CHECK(l1 >= b3.box.iv[0].lo - 1e-9);
        CHECK(l1 <= b3.box.iv[0].hi + 1e-9);
        CHECK(l2 >= b3.box.iv[1].lo - 1e-9);
        CHECK(l2 <= b3.box.iv[1].hi + 1e-9);
    }
    CHECK(tested >= 30);
}

TEST_CASE("verify_cover: n = 1, 2, 3 fully covered") {
    GammaTable g = GammaTable::exact_defaults();
    CoverCertificate c1 = verify_cover(1, 1e-3, g);
    CHECK(c1.covered);

    CoverCertificate c2 = verify_cover(2, 1e-3, g);
    CHECK(c2.covered);
    for (const auto& leaf : c2.leaves) CHECK(leaf.verdict != LeafVerdict::Unresolved);

    CoverCertificate c3 = verify_cover(3, 1e-3, g);
    CHECK(c3.covered);
}

TEST_CASE("certificate re-validation passes with zero violations") {
    GammaTable g = GammaTable::exact_defaults();
    CoverCertificate c3 = verify_cover(3, 1e-3, g);
    CertCheckReport rep = check_certificate(c3, g, 2000, 17, 0.5);
    CHECK(rep.partition_ok);
    CHECK(rep.violations == 0);
    CHECK(rep.exact_failures == 0);
    CHECK(rep.points_checked > 0);
}

TEST_CASE("covered boxes stay covered when shrunk (conservativeness)") {
    GammaTable g = GammaTable::exact_defaults();
    CoverCertificate c3 = verify_cover(3, 1e-2, g);
    int checked = 0;
    for (const auto& leaf : c3.leaves) {
        if (leaf.verdict != LeafVerdict::Covered) continue;
        if (leaf.box.max_width() <= 0.0) continue;
        Composition comp{leaf.composition};
        // both bisection children along the widest axis remain covered
        std::size_t split = 0;
        double w = -1.0;
        for (std::size_t j = 0; j < leaf.box.iv.size(); ++j) {
            double wj = leaf.box.iv[j].hi - leaf.box.iv[j].lo;
            if (wj > w) { w = wj; split = j; }
        }
        if (w <= 0.0) continue;
        double mid = 0.5 * (leaf.box.iv[split].lo + leaf.box.iv[split].hi);
        LogBox a = leaf.box, b = leaf.box;
        a.iv[split] = Interval::bounds(leaf.box.iv[split].lo, mid);
        b.iv[split] = Interval::bounds(mid, leaf.box.iv[split].hi);
        CHECK(region_covers(comp, a, g));
        CHECK(region_covers(comp, b, g));
        if (++checked >= 10) break;
    }
    CHECK(checked > 0);
}

TEST_CASE("profiles of stable lattices avoid OutsideRegion leaves") {
    GammaTable g = GammaTable::exact_defaults();
    CoverCertificate c2 = verify_cover(2, 1e-3, g);
    Rng rng(261);
    int done = 0;
    for (int iter = 0; iter < 60 && done < 25; ++iter) {
        Lattice x = make_stable_2d(rng);
        if (!alpha(x).stable) continue;
        KZProfile p = kz_reduce(x);
        double l1 = std::log(p.coefficients[0]);
        ++done;
        // locate the leaf containing l1
        bool in_outside_only = true;
        for (const auto& leaf : c2.leaves) {
            if (l1 >= leaf.box.iv[0].lo - 1e-12 && l1 <= leaf.box.iv[0].hi + 1e-12) {
                if (leaf.verdict != LeafVerdict::OutsideRegion) in_outside_only = false;
            }
        }
        CHECK_FALSE(in_outside_only);
    }
    CHECK(done >= 20);
}

TEST_CASE("exploratory n = 4 run makes progress within a deadline") {
    GammaTable g = GammaTable::exact_defaults();
    CoverCertificate c4 = verify_cover(4, 0.02, g, 20.0);
    CHECK(!c4.leaves.empty());
    std::size_t covered = 0;
    for (const auto& leaf : c4.leaves)
        if (leaf.verdict == LeafVerdict::Covered) ++covered;
    CHECK(covered > 0);
    // certificate sampling still passes on whatever was covered
    CertCheckReport rep = check_certificate(c4, g, 200, 3);
    CHECK(rep.violations == 0);
}

TEST_CASE("verify_cover caps and validation") {
    GammaTable g = GammaTable::exact_defaults();
    CHECK_THROWS_AS(verify_cover(8, 1e-3, g), CapExceededError);
    CHECK_THROWS_AS(verify_cover(3, 0.0, g), ValidationError);
}
