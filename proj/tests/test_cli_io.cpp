// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oc/config_io.hpp"

using namespace oc;

namespace {

Json parse(const char* text) { return Json::parse(text); }

} // namespace

TEST_CASE("rational scalars in JSON") {
    CHECK(rational_from_json(parse(R"("1/8")"), "x") == Rational(1, 8));
    CHECK(rational_from_json(parse("-3"), "x") == Rational(-3));
    CHECK(rational_to_json(Rational(1, 8)) == Json("1/8"));
    CHECK_THROWS_WITH_AS(rational_from_json(parse("0.5"), "theta[0][0]"),
                         "theta[0][0]: expected an integer or a \"p/q\" string", ConfigError);
    CHECK_THROWS_AS(rational_from_json(parse(R"("1/0")"), "x"), ConfigError);
}

TEST_CASE("conifold configurations") {
    auto cfg = conifold_config_from_json(parse(
        R"({"kappa":2,"singularities":[{"r":2,"a":1},{"r":3,"a":2}],"theta":[["1","-1/2"]]})"));
    CHECK(cfg.kappa() == 2);
    CHECK(cfg.singularities[1].a == 2);
    CHECK(cfg.theta.at(0, 1) == Rational(-1, 2));

    // gcd violation is reported with the singularity index.
    CHECK_THROWS_WITH_AS(
        conifold_config_from_json(parse(
            R"({"singularities":[{"r":2,"a":1},{"r":4,"a":2}],"theta":[["1","1"]]})")),
        "config.singularities[1]: gcd(a, r) must be 1", ConfigError);

    // kappa must match the singularity list.
    CHECK_THROWS_AS(conifold_config_from_json(parse(
                        R"({"kappa":3,"singularities":[{"r":2,"a":1}],"theta":[["1"]]})")),
                    ConfigError);

    // Theta shape mismatch.
    CHECK_THROWS_AS(conifold_config_from_json(parse(
                        R"({"singularities":[{"r":2,"a":1}],"theta":[["1","1"]]})")),
                    ConfigError);

    // Missing fields name the field.
    CHECK_THROWS_WITH_AS(conifold_config_from_json(parse(R"({"theta":[["1"]]})")),
                         "config: missing field 'singularities'", ConfigError);
}

TEST_CASE("ring data round trip is byte-identical") {
    auto pair = synthetic_flop_pair({validate_model(2, 1, Side::s), validate_model(3, 1, Side::s)},
                                    Rational(11, 2));
    const Json jx = ring_to_json(pair.x);
    auto reloaded = ring_from_json(jx, "ring_x");
    CHECK(reloaded.basis.size() == pair.x.basis.size());
    CHECK(reloaded.pairing == pair.x.pairing);
    CHECK(reloaded.classical == pair.x.classical);
    CHECK(reloaded.ray_pairings == pair.x.ray_pairings);
    CHECK(ring_to_json(reloaded).dump() == jx.dump());

    const Json jc = correspondence_to_json(pair.corr);
    auto corr = correspondence_from_json(jc);
    CHECK(corr.class_map == pair.corr.class_map);
    CHECK(corr.ray_map == pair.corr.ray_map);

    // The loaded pair still verifies.
    auto report = verify_ruan_isomorphism(reloaded, ring_from_json(ring_to_json(pair.y), "ring_y"),
                                          corr);
    CHECK(report.pass);
}

TEST_CASE("ring schema errors") {
    auto pair = synthetic_flop_pair({validate_model(2, 1, Side::s)}, Rational(8));
    Json j = ring_to_json(pair.x);

    Json bad = j;
    bad["pairing"][0][1] = "7"; // symmetry broken
    CHECK_THROWS_WITH_AS(ring_from_json(bad, "ring_x"), "ring_x: pairing matrix not symmetric",
                         ConfigError);

    bad = j;
    bad["classical"][0]["labels"][0] = "nope";
    CHECK_THROWS_AS(ring_from_json(bad, "ring_x"), ConfigError);

    bad = j;
    bad["ray_pairings"]["H"]["missing_ray"] = "1";
    CHECK_THROWS_AS(ring_from_json(bad, "ring_x"), ConfigError);

    bad = j;
    bad.erase("basis");
    CHECK_THROWS_WITH_AS(ring_from_json(bad, "ring_x"), "ring_x: missing field 'basis'",
                         ConfigError);
}

TEST_CASE("reports are deterministic") {
    auto cfg = conifold_config_from_json(
        parse(R"({"singularities":[{"r":2,"a":1},{"r":3,"a":1}],"theta":[["1","1"]]})"));
    const Json r1 = resolve_report(cfg, kDefaultKappaCap);
    const Json r2 = resolve_report(cfg, kDefaultKappaCap);
    CHECK(r1.dump() == r2.dump());
    CHECK(r1["symplectic_resolution_count"] == 2);
    CHECK(r1["feasible_patterns"][0]["signs"] == Json::array({-1, 1}));
    CHECK(r1["feasible_patterns"][0]["resolution"] == Json::array({"s", "sf"}));

    auto flop = local_flop_report_to_json(local_flop_check(2, 1), 2, 1);
    CHECK(flop["all_ok"] == true);

    SampleConfig scfg;
    scfg.count = 50;
    const Json g1 = geometry_report_to_json(certify_geometry(2, 1, scfg));
    const Json g2 = geometry_report_to_json(certify_geometry(2, 1, scfg));
    CHECK(g1.dump() == g2.dump());
    CHECK(g1["pass"] == true);
}

TEST_CASE("file loading errors") {
    CHECK_THROWS_WITH_AS(load_json_file("/nonexistent/path.json"),
                         "cannot open file: /nonexistent/path.json", ConfigError);
}
