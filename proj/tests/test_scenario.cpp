#include <doctest.h>

#include "approx.hpp"

#include <sstream>

#include "marsnet/scenario.hpp"

using namespace marsnet;

namespace {

Scenario parse(const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in);
}

}  // namespace

TEST_CASE("empty scenario gives the full set of defaults") {
    const Scenario sc = parse("");
    CHECK(sc.body.radius_km == 3389.5);
    CHECK(sc.body.gm_km3_s2 == 42828.37);
    CHECK(sc.body.rotation_period_s == 88642.44);
    CHECK(sc.walker.planes == 9);
    CHECK(sc.walker.sats_per_plane == 9);
    CHECK(sc.walker.altitude_km == 1120.0);
    CHECK(sc.walker.inclination_deg == 90.0);
    CHECK(sc.walker.raan_spread_deg == 180.0);
    CHECK(sc.min_elevation_deg == 25.0);
    CHECK(sc.grid_deg == 2.0);
    CHECK(sc.dt_s == 10.0);
    CHECK(sc.earth.rtt_s == 360.0);
    CHECK(sc.earth.bandwidth_bps == 40500.0);
    CHECK(sc.constellation().size() == 81);
    CHECK(sc.stations().size() == default_ground_stations().size());
    CHECK(sc.window_end_s() == testutil::near(9194.05, 0.1));
    CHECK(mass_overhead(sc.mass).edl_total_kg == 2085.0);
}

TEST_CASE("single overrides leave everything else alone") {
    const Scenario sc = parse("walker.planes=4\n");
    CHECK(sc.walker.planes == 4);
    CHECK(sc.walker.sats_per_plane == 9);
    CHECK(sc.constellation().size() == 36);
}

TEST_CASE("comments, blank lines, and whitespace are tolerated") {
    const Scenario sc = parse(
        "# a comment\n"
        "\n"
        "  walker.altitude_km = 900  \n"
        "network.cross_seam = true\n");
    CHECK(sc.walker.altitude_km == 900.0);
    CHECK(sc.cross_seam);
}

TEST_CASE("scenario validation errors") {
    CHECK_THROWS_AS(parse("walker.altitude_km=-5\n"), ValidationError);
    CHECK_THROWS_WITH_AS(parse("nonsense.key=1\n"), doctest::Contains("nonsense.key"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse("walker.planes=abc\n"), doctest::Contains("line 1"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse("# ok\ntime.dt_s=fast\n"), doctest::Contains("line 2"),
                         ValidationError);
    CHECK_THROWS_AS(parse("network.cross_seam=yes\n"), ValidationError);
    CHECK_THROWS_AS(parse("just a line\n"), ValidationError);
    CHECK_THROWS_AS(parse("time.t0_s=100\ntime.t1_s=50\n"), ValidationError);
    CHECK_THROWS_AS(parse("grid.resolution_deg=45\n"), ValidationError);
    CHECK_THROWS_AS(parse("app.preprocess_retention=1.2\n"), ValidationError);
    CHECK_THROWS_AS(parse("handover.policy=nearest\n"), ValidationError);
    CHECK_THROWS_AS(parse("mass.payload_kg=0\n"), ValidationError);
}

TEST_CASE("missing station catalog is a validation error") {
    const Scenario sc = parse("stations.catalog=/no/such/file.csv\n");
    CHECK_THROWS_AS(sc.stations(), ValidationError);
}

TEST_CASE("user EDL components replace the default set") {
    const Scenario sc = parse(
        "mass.payload_kg=800\n"
        "mass.edl.shell=100\n"
        "mass.edl.legs=50\n");
    REQUIRE(sc.mass.edl_components_kg.size() == 2);
    CHECK(sc.mass.edl_components_kg[0].first == "shell");
    CHECK(mass_overhead(sc.mass).edl_total_kg == 150.0);
}

TEST_CASE("effective config echo is canonical and resolves derived values") {
    const Scenario sc = parse("");
    const std::string cfg = effective_config(sc);
    CHECK(cfg.find("stations.catalog=<builtin>\n") != std::string::npos);
    CHECK(cfg.find("time.t1_s=9194.046211\n") != std::string::npos);
    CHECK(cfg.find("softerror.processors=81\n") != std::string::npos);
    CHECK(cfg.find("body.rotation_period_s=88642.44\n") != std::string::npos);
    CHECK(cfg == effective_config(parse("")));

    // explicit values round-trip
    const Scenario sc2 = parse("time.t1_s=1234.5\nsofterror.processors=7\n");
    const std::string cfg2 = effective_config(sc2);
    CHECK(cfg2.find("time.t1_s=1234.5\n") != std::string::npos);
    CHECK(cfg2.find("softerror.processors=7\n") != std::string::npos);
}
