#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "marsnet/runner.hpp"

using namespace marsnet;
namespace fs = std::filesystem;

namespace {

const fs::path kScratch = "runner_scratch";

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A light scenario so runner tests stay fast.
Scenario quick_scenario() {
    std::istringstream in(
        "grid.resolution_deg=6\n"
        "time.dt_s=600\n");
    return parse_scenario(in);
}

}  // namespace

TEST_CASE("mass command writes the landing budget") {
    const fs::path dir = kScratch / "mass";
    fs::remove_all(dir);
    run_command("mass", quick_scenario(), dir.string());
    const std::string csv = slurp(dir / "mass.csv");
    CHECK(csv.find("quantity,value,unit\n") != std::string::npos);
    CHECK(csv.find("edl_total_kg,2085,kg\n") != std::string::npos);
    CHECK(csv.find("overhead_ratio,2.03415,ratio\n") != std::string::npos);
    CHECK(csv.find("# marsnet ") != std::string::npos);
    CHECK(fs::exists(dir / "effective_config.cfg"));
}

TEST_CASE("rtt command writes the geometry anchors") {
    const fs::path dir = kScratch / "rtt";
    fs::remove_all(dir);
    run_command("rtt", quick_scenario(), dir.string());
    const std::string csv = slurp(dir / "rtt.csv");
    CHECK(csv.find("areostationary_altitude_km,17038.1,km\n") != std::string::npos);
    CHECK(csv.find("rtt_areostationary_edge_ms,125.172,ms\n") != std::string::npos);
    CHECK(csv.find("rtt_walker_edge_ms,12.4678,ms\n") != std::string::npos);
    CHECK(csv.find("rtt_1000km_edge_ms,11.361,ms\n") != std::string::npos);
    CHECK(csv.find("min_equatorial_ring_areostationary,4,count\n") != std::string::npos);
    // documented note about the rounded 12 ms narrative
    CHECK(csv.find("round") != std::string::npos);
}

TEST_CASE("coverage command writes the band report") {
    const fs::path dir = kScratch / "coverage";
    fs::remove_all(dir);
    run_command("coverage", quick_scenario(), dir.string());
    const std::string csv = slurp(dir / "coverage.csv");
    CHECK(csv.find("lat_band_deg,covered_fraction,max_rtt_ms,mean_rtt_ms\n") !=
          std::string::npos);
    CHECK(csv.find("\nALL,") != std::string::npos);
}

TEST_CASE("linkbudget command includes the scaled powers") {
    const fs::path dir = kScratch / "linkbudget";
    fs::remove_all(dir);
    run_command("linkbudget", quick_scenario(), dir.string());
    const std::string csv = slurp(dir / "linkbudget.csv");
    CHECK(csv.find("reference_power_w,10,W\n") != std::string::npos);
    CHECK(csv.find("power_1000km_edge_w,0.0823787,W\n") != std::string::npos);
    CHECK(csv.find("dust_attenuation_factor,0.501187,ratio\n") != std::string::npos);
    CHECK(csv.find("expected_soft_errors,0.081,count\n") != std::string::npos);
}

TEST_CASE("route command fails cleanly without stations") {
    const fs::path dir = kScratch / "route_empty";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path catalog = dir / "empty.csv";
    std::ofstream(catalog) << "name,lat_deg,lon_deg,min_elevation_deg\n";

    std::istringstream in("stations.catalog=" + catalog.string() + "\n");
    const Scenario sc = parse_scenario(in);
    CHECK_THROWS_AS(run_command("route", sc, (dir / "out").string()), ValidationError);
}

TEST_CASE("unknown commands are rejected") {
    CHECK_THROWS_AS(run_command("fly", quick_scenario(), (kScratch / "x").string()),
                    ValidationError);
}

TEST_CASE("unknown station names are rejected") {
    std::istringstream in("handover.station=atlantis\n");
    const Scenario sc = parse_scenario(in);
    CHECK_THROWS_AS(run_command("handover", sc, (kScratch / "x").string()), ValidationError);

    std::istringstream in2("route.station_a=viking1\nroute.station_b=atlantis\n");
    const Scenario sc2 = parse_scenario(in2);
    CHECK_THROWS_AS(run_command("route", sc2, (kScratch / "x").string()), ValidationError);
}

TEST_CASE("handover and route outputs parse back as CSV") {
    const fs::path dir = kScratch / "sweep";
    fs::remove_all(dir);
    std::istringstream in(
        "grid.resolution_deg=10\n"
        "time.dt_s=600\n"
        "route.station_a=viking1\n"
        "route.station_b=spirit\n");
    const Scenario sc = parse_scenario(in);
    run_command("route", sc, dir.string());
    run_command("handover", sc, dir.string());

    const std::string route_csv = slurp(dir / "route.csv");
    CHECK(route_csv.find("t_s,src,dst,delay_ms,hops,path\n") != std::string::npos);
    CHECK(route_csv.find("viking1,spirit") != std::string::npos);

    const std::string handover_csv = slurp(dir / "handover.csv");
    CHECK(handover_csv.find("t_start_s,t_end_s,station,satellite\n") != std::string::npos);
    CHECK(handover_csv.find("perseverance") != std::string::npos);
}

TEST_CASE("apps command labels the bandwidth assumption") {
    const fs::path dir = kScratch / "apps";
    fs::remove_all(dir);
    run_command("apps", quick_scenario(), dir.string());
    const std::string csv = slurp(dir / "apps.csv");
    CHECK(csv.find("scenario,quantity,value,unit,assumptions\n") != std::string::npos);
    CHECK(csv.find("(assumed)") != std::string::npos);
    CHECK(csv.find("offload,latency_s,") != std::string::npos);
    CHECK(csv.find("cache,fetch_miss_s,") != std::string::npos);
    CHECK(csv.find("preprocess,uplink_rate_bps,40500,bps") != std::string::npos);
    CHECK(csv.find("collaboration,one_way_min_ms,") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
    const Scenario sc = quick_scenario();
    const fs::path dir_a = kScratch / "det_a";
    const fs::path dir_b = kScratch / "det_b";
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
    run_command("all", sc, dir_a.string());
    run_command("all", sc, dir_b.string());

    int compared = 0;
    for (const auto& entry : fs::directory_iterator(dir_a)) {
        const fs::path other = dir_b / entry.path().filename();
        REQUIRE(fs::exists(other));
        CHECK(slurp(entry.path()) == slurp(other));
        ++compared;
    }
    CHECK(compared >= 8);  // seven reports plus the effective config
}
