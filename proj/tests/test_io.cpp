#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gon/json_io.hpp"
#include "helpers.hpp"

using namespace gon;
using namespace testutil;

TEST_CASE("lattice json round trip, float mode") {
    Lattice x = diag_lattice({0.5, 2.0});
    json j = lattice_to_json(x);
    Lattice y = lattice_from_json(j);
    CHECK(y.dim == 2);
    CHECK(y.basis[0][0] == doctest::Approx(0.5));
    CHECK(y.basis[1][1] == doctest::Approx(2.0));
}

TEST_CASE("lattice json with rational entries") {
    json j;
    j["dim"] = 2;
    j["rational"] = true;
    j["basis"] = json::array({json::array({"1/2", "0"}), json::array({"0", "2"})});
    Lattice x = lattice_from_json(j);
    CHECK(x.rational);
    CHECK(x.rbasis[0][0] == Rational(1, 2));
    CHECK(x.det_rational() == Rational(1));
    json back = lattice_to_json(x);
    CHECK(back["basis"][0][0].get<std::string>() == "1/2");
}

TEST_CASE("lattice json validation errors") {
    json j;
    j["dim"] = 2;
    j["basis"] = {{1.0, 0.0}};
    CHECK_THROWS_AS(lattice_from_json(j), ValidationError);
    json empty;
    CHECK_THROWS_AS(lattice_from_json(empty), ValidationError);
}

TEST_CASE("certificate json round trip preserves verdicts and boxes") {
    GammaTable g = GammaTable::exact_defaults();
    CoverCertificate cert = verify_cover(3, 1e-2, g);
    json j = certificate_to_json(cert);
    CoverCertificate back = certificate_from_json(j);
    REQUIRE(back.leaves.size() == cert.leaves.size());
    CHECK(back.dim == cert.dim);
    CHECK(back.covered == cert.covered);
    for (std::size_t i = 0; i < cert.leaves.size(); ++i) {
        CHECK(back.leaves[i].verdict == cert.leaves[i].verdict);
        for (std::size_t k = 0; k < cert.leaves[i].box.iv.size(); ++k) {
            CHECK(back.leaves[i].box.iv[k].lo == cert.leaves[i].box.iv[k].lo);
            CHECK(back.leaves[i].box.iv[k].hi == cert.leaves[i].box.iv[k].hi);
        }
    }
    // re-validation works on the round-tripped certificate
    CertCheckReport rep = check_certificate(back, g, 500, 3);
    CHECK(rep.ok());
}

TEST_CASE("gamma table json loader") {
    json j;
    j["exact"] = {{"1", 1.0}, {"2", 1.074569931823542}};
    j["fallback"] = "minkowski";
    GammaTable t = gamma_table_from_json(j);
    CHECK(t.get(2).provenance == GammaProvenance::known_exact);
    CHECK(t.get(2).has_exact_power); // matched the built-in value, exact power attached
    CHECK(t.get(3).provenance == GammaProvenance::minkowski_fallback);

    json bad = j;
    bad["fallback"] = "other";
    CHECK_THROWS_AS(gamma_table_from_json(bad), ValidationError);
}

TEST_CASE("non-finite report values are rejected") {
    CHECK_THROWS_AS(checked_finite(std::nan("")), ValidationError);
    CHECK_THROWS_AS(checked_finite(1.0 / 0.0), ValidationError);
    CHECK(checked_finite(1.5) == 1.5);
}

TEST_CASE("report serializers embed all required fields") {
    StabilityReport rep = alpha(zn(2));
    json j = stability_to_json(rep);
    CHECK(j.contains("alpha"));
    CHECK(j.contains("alpha_by_rank"));
    CHECK(j.contains("stable"));
    CHECK(j.at("witness").contains("generators"));

    StableFractionReport sf = estimate_stable_fraction(2, 100, 5);
    json js = stable_fraction_to_json(sf);
    CHECK(js.at("sampler") == "exact2d");
    CHECK(js.contains("ci95"));
    CHECK(js.at("seed") == 5);
}
