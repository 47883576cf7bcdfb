#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gon/lattice.hpp"
#include "helpers.hpp"

using namespace gon;
using namespace testutil;

TEST_CASE("gram_schmidt identity and forced-projection cases") {
    GramSchmidt g = gram_schmidt(mat_identity(3));
    for (int i = 0; i < 3; ++i) CHECK(g.lengths_sq[i] == doctest::Approx(1.0));

    Mat basis = {{1.0, 0.0}, {1.0, 1.0}};
    GramSchmidt g2 = gram_schmidt(basis);
    CHECK(g2.ortho[0][0] == doctest::Approx(1.0));
    CHECK(g2.ortho[1][0] == doctest::Approx(0.0));
    CHECK(g2.ortho[1][1] == doctest::Approx(1.0));
    CHECK(std::sqrt(g2.lengths_sq[0]) == doctest::Approx(1.0));
    CHECK(std::sqrt(g2.lengths_sq[1]) == doctest::Approx(1.0));
}

TEST_CASE("gram_schmidt rejects dependent input with the offending index") {
    Mat bad = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {1.0, 1.0, 0.0}};
    CHECK_THROWS_AS(gram_schmidt(bad), RankDeficiencyError);
    try {
        gram_schmidt(bad);
    } catch (const RankDeficiencyError& e) {
        CHECK(e.index == 2);
    }
}

TEST_CASE("gram_schmidt length product equals |det| on random 4x4 bases") {
    Rng rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        Mat m(4, Vec(4));
        for (auto& row : m)
            for (auto& v : row) v = rng.uniform(-2.0, 2.0);
        double d = std::fabs(det_cofactor(m));
        if (d < 1e-3) continue;
        GramSchmidt g = gram_schmidt(m);
        double prod = 1.0;
        for (double ls : g.lengths_sq) prod *= std::sqrt(ls);
        CHECK(prod == doctest::Approx(d).epsilon(1e-9));
    }
}

TEST_CASE("covolume basics") {
    CHECK(covolume_of_rows({{2.0, 0.0}, {0.0, 3.0}}) == doctest::Approx(6.0));
    CHECK(covolume_of_rows({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}) == doctest::Approx(1.0));
    // Gram determinant det[[2,1],[1,2]] = 3
    CHECK(covolume_of_rows({{1.0, 1.0, 0.0}, {0.0, 1.0, 1.0}}) ==
          doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(covolume_of_rows({{1.0, 1.0}, {2.0, 2.0}}), RankDeficiencyError);
}

TEST_CASE("saturate recovers primitive closures") {
    Lattice z2 = zn(2);
    SublatticeWitness w = saturate(z2, {{2.0, 0.0}});
    CHECK(w.rank == 1);
    CHECK(w.covolume == doctest::Approx(1.0));
    CHECK(w.coeffs[0][0] == BigInt(1));
    CHECK(w.coeffs[0][1] == BigInt(0));

    Lattice z3 = zn(3);
    SublatticeWitness w2 = saturate(z3, {{2.0, 0.0, 0.0}, {0.0, 3.0, 0.0}});
    CHECK(w2.rank == 2);
    CHECK(w2.covolume == doctest::Approx(1.0));

    CHECK_THROWS_AS(saturate(z2, {{0.5, 0.0}}), MembershipError);
}

TEST_CASE("saturation covolume equals covolume/index via hnf oracle") {
    Rng rng(21);
    for (int iter = 0; iter < 40; ++iter) {
        Lattice z4 = zn(4);
        IntMat coeffs;
        Mat gens;
        for (int i = 0; i < 3; ++i) {
            Vec g(4);
            for (auto& v : g) v = static_cast<double>(rng.uniform_int(-5, 5));
            gens.push_back(g);
        }
        if (std::fabs(gram_det(gens)) < 1e-6) continue;
        SublatticeWitness raw = make_witness_from_vectors(z4, gens);
        SublatticeWitness sat = saturate(z4, gens);
        // index = product of HNF pivots of raw coeffs divided by sat pivots
        double index = raw.covolume / sat.covolume;
        CHECK(index == doctest::Approx(std::round(index)).epsilon(1e-9));
        CHECK(index >= 1.0 - 1e-9);
        CHECK(sat.covolume <= raw.covolume + 1e-9);
    }
}

TEST_CASE("project_complement on coordinate sublattices") {
    Lattice z2 = zn(2);
    SublatticeWitness w = saturate(z2, {{1.0, 0.0}});
    Lattice p = project_complement(z2, w);
    CHECK(p.dim == 1);
    CHECK(std::fabs(p.basis[0][0]) == doctest::Approx(1.0));

    Lattice z3 = zn(3);
    SublatticeWitness w3 = saturate(z3, {{0.0, 0.0, 1.0}});
    Lattice p3 = project_complement(z3, w3);
    CHECK(p3.dim == 2);
    CHECK(p3.det_abs() == doctest::Approx(1.0));
}

TEST_CASE("project_complement rejects non-primitive subgroups") {
    Lattice z2 = zn(2);
    SublatticeWitness w = make_witness(z2, {{BigInt(2), BigInt(0)}});
    CHECK_THROWS_WITH_AS(project_complement(z2, w),
                         doctest::Contains("saturate"), ValidationError);
}

TEST_CASE("covolume product identity on random block lattices") {
    Rng rng(31);
    for (int iter = 0; iter < 30; ++iter) {
        Lattice b1 = random_unimodular(rng, 2);
        Lattice b2 = random_unimodular(rng, 2);
        Mat fill(2, Vec(2));
        for (auto& row : fill)
            for (auto& v : row) v = rng.uniform(-1.0, 1.0);
        Lattice x = block_compose({b1, b2}, {fill});
        // the first block is a primitive rank-2 subgroup
        SublatticeWitness w = saturate(x, {x.basis[0], x.basis[1]});
        REQUIRE(w.rank == 2);
        Lattice proj = project_complement(x, w);
        double lhs = x.det_abs();
        double rhs = w.covolume * proj.det_abs();
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("block_compose validation and trivial cases") {
    Lattice z2 = zn(2);
    Lattice x = block_compose({z2, z2}, {Mat(2, Vec(2, 0.0))});
    CHECK(x.dim == 4);
    CHECK(x.det_abs() == doctest::Approx(1.0));

    Lattice z1 = zn(1);
    Lattice y = block_compose({z1, z1}, {Mat{{0.5}}});
    CHECK(y.basis[0][0] == doctest::Approx(1.0));
    CHECK(y.basis[1][0] == doctest::Approx(0.5));
    CHECK(y.basis[1][1] == doctest::Approx(1.0));
    CHECK(y.det_abs() == doctest::Approx(1.0));

    Lattice bad = diag_lattice({2.0, 1.0});
    CHECK_THROWS_AS(block_compose({bad, z2}, {Mat(2, Vec(2, 0.0))}), ValidationError);
}

TEST_CASE("covolume equals Gram-Schmidt length product (randomized invariant)") {
    Rng rng(41);
    for (int iter = 0; iter < 50; ++iter) {
        std::size_t n = 2 + iter % 4;
        Mat gens(n - 1, Vec(n));
        for (auto& row : gens)
            for (auto& v : row) v = rng.uniform(-3.0, 3.0);
        if (std::fabs(gram_det(gens)) < 1e-8) continue;
        GramSchmidt g = gram_schmidt(gens);
        double prod = 1.0;
        for (double ls : g.lengths_sq) prod *= std::sqrt(ls);
        CHECK(covolume_of_rows(gens) == doctest::Approx(prod).epsilon(1e-9));
    }
}

TEST_CASE("sum inequality with exact intersection on Z^4 subgroups") {
    Lattice z4 = zn(4);
    Rng rng(51);
    int tested = 0;
    for (int iter = 0; iter < 200 && tested < 120; ++iter) {
        auto draw = [&](int r) {
            IntMat c;
            for (int i = 0; i < r; ++i) {
                IntVec row(4);
                for (auto& v : row) v = BigInt(rng.uniform_int(-2, 2));
                c.push_back(std::move(row));
            }
            return c;
        };
        IntMat ca = draw(rng.uniform_int(1, 3));
        IntMat cb = draw(rng.uniform_int(1, 3));
        IntMat ha = hnf(ca), hb = hnf(cb);
        if (ha.empty() || hb.empty()) continue;
        SublatticeWitness a = make_witness(z4, ha);
        SublatticeWitness b = make_witness(z4, hb);
        SublatticeWitness s = subgroup_sum(z4, a, b);
        SublatticeWitness i = subgroup_intersection(z4, a, b);
        double lhs = s.covolume * i.covolume;
        double rhs = a.covolume * b.covolume;
        CHECK(lhs <= rhs * (1.0 + 1e-9));
        ++tested;
    }
    CHECK(tested >= 100);
}

TEST_CASE("block_compose is exactly unimodular in rational mode") {
    Lattice z2r = zn_rational(2);
    Lattice x = block_compose({z2r, z2r}, {Mat(2, Vec(2, 0.0))});
    REQUIRE(x.rational);
    CHECK(x.det_rational() == Rational(1));

    // dyadic fill entries stay exact
    Mat fill(2, Vec(2, 0.0));
    fill[0][0] = 0.5;
    fill[1][1] = -0.25;
    Lattice y = block_compose({z2r, z2r}, {fill});
    REQUIRE(y.rational);
    CHECK(y.det_rational() == Rational(1));
    CHECK(y.rbasis[2][0] == Rational(1, 2));
}

TEST_CASE("rational mode: exact membership and covolume") {
    Lattice x = zn_rational(3);
    CHECK(x.is_unimodular());
    CHECK_THROWS_AS(coefficients_in(x, {0.5, 0.0, 0.0}), MembershipError);
    IntMat coeffs = {{BigInt(1), BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1), BigInt(1)}};
    Rational cov2 = covolume_sq_exact(x, coeffs);
    CHECK(cov2 == Rational(3));
}
