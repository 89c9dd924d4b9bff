#include "marsnet/scenario.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace marsnet {

namespace {

std::string trim(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, int line_no) {
    char* stop = nullptr;
    const double out = std::strtod(value.c_str(), &stop);
    if (value.empty() || stop != value.c_str() + value.size()) {
        std::ostringstream msg;
        msg << "scenario line " << line_no << ": expected a number, got '" << value << "'";
        throw ValidationError(msg.str());
    }
    return out;
}

int parse_int(const std::string& value, int line_no) {
    int out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        std::ostringstream msg;
        msg << "scenario line " << line_no << ": expected an integer, got '" << value << "'";
        throw ValidationError(msg.str());
    }
    return out;
}

bool parse_bool(const std::string& value, int line_no) {
    if (value == "true") return true;
    if (value == "false") return false;
    std::ostringstream msg;
    msg << "scenario line " << line_no << ": expected true or false, got '" << value << "'";
    throw ValidationError(msg.str());
}

// High-precision echo so config values round-trip through the effective dump.
std::string fmt_cfg(double value) {
    if (value == 0.0) value = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

}  // namespace

std::vector<GroundStation> Scenario::stations() const {
    if (stations_catalog.empty()) return default_ground_stations();
    try {
        return load_ground_stations_file(stations_catalog);
    } catch (const std::runtime_error& e) {
        // catalog problems are user-fixable scenario errors
        throw ValidationError(e.what());
    }
}

Constellation Scenario::constellation() const { return generate_walker(walker); }

double Scenario::window_end_s() const {
    if (t1_s >= 0.0) return t1_s;
    const CircularOrbit orbit(walker.altitude_km, walker.inclination_deg, 0.0, 0.0);
    return t0_s + orbital_period_s(body, orbit);
}

Scenario parse_scenario(std::istream& in) {
    Scenario sc;
    bool mass_components_replaced = false;

    using Setter = std::function<void(Scenario&, const std::string&, int)>;
    static const std::map<std::string, Setter> setters = {
        {"body.radius_km", [](Scenario& s, const std::string& v, int ln) { s.body.radius_km = parse_double(v, ln); }},
        {"body.gm_km3_s2", [](Scenario& s, const std::string& v, int ln) { s.body.gm_km3_s2 = parse_double(v, ln); }},
        {"body.rotation_period_s", [](Scenario& s, const std::string& v, int ln) { s.body.rotation_period_s = parse_double(v, ln); }},
        {"walker.planes", [](Scenario& s, const std::string& v, int ln) { s.walker.planes = parse_int(v, ln); }},
        {"walker.sats_per_plane", [](Scenario& s, const std::string& v, int ln) { s.walker.sats_per_plane = parse_int(v, ln); }},
        {"walker.altitude_km", [](Scenario& s, const std::string& v, int ln) { s.walker.altitude_km = parse_double(v, ln); }},
        {"walker.inclination_deg", [](Scenario& s, const std::string& v, int ln) { s.walker.inclination_deg = parse_double(v, ln); }},
        {"walker.raan_spread_deg", [](Scenario& s, const std::string& v, int ln) { s.walker.raan_spread_deg = parse_double(v, ln); }},
        {"walker.phasing_offset_deg", [](Scenario& s, const std::string& v, int ln) { s.walker.phasing_offset_deg = parse_double(v, ln); }},
        {"network.cross_seam", [](Scenario& s, const std::string& v, int ln) { s.cross_seam = parse_bool(v, ln); }},
        {"stations.catalog", [](Scenario& s, const std::string& v, int) { s.stations_catalog = v; }},
        {"time.t0_s", [](Scenario& s, const std::string& v, int ln) { s.t0_s = parse_double(v, ln); }},
        {"time.t1_s", [](Scenario& s, const std::string& v, int ln) { s.t1_s = parse_double(v, ln); }},
        {"time.dt_s", [](Scenario& s, const std::string& v, int ln) { s.dt_s = parse_double(v, ln); }},
        {"grid.resolution_deg", [](Scenario& s, const std::string& v, int ln) { s.grid_deg = parse_double(v, ln); }},
        {"coverage.min_elevation_deg", [](Scenario& s, const std::string& v, int ln) { s.min_elevation_deg = parse_double(v, ln); }},
        {"coverage.processing_delay_ms", [](Scenario& s, const std::string& v, int ln) { s.processing_delay_ms = parse_double(v, ln); }},
        {"link.reference_power_w", [](Scenario& s, const std::string& v, int ln) { s.link_reference_power_w = parse_double(v, ln); }},
        {"link.reference_rate_bps", [](Scenario& s, const std::string& v, int ln) { s.link_reference_rate_bps = parse_double(v, ln); }},
        {"link.dust_attenuation_db", [](Scenario& s, const std::string& v, int ln) { s.dust_attenuation_db = parse_double(v, ln); }},
        {"softerror.rate_per_day", [](Scenario& s, const std::string& v, int ln) { s.soft_error_rate_per_day = parse_double(v, ln); }},
        {"softerror.processors", [](Scenario& s, const std::string& v, int ln) { s.soft_error_processors = parse_double(v, ln); }},
        {"softerror.days", [](Scenario& s, const std::string& v, int ln) { s.soft_error_days = parse_double(v, ln); }},
        {"mass.payload_kg", [](Scenario& s, const std::string& v, int ln) { s.mass.payload_kg = parse_double(v, ln); }},
        {"earth.rtt_s", [](Scenario& s, const std::string& v, int ln) { s.earth.rtt_s = parse_double(v, ln); }},
        {"earth.bandwidth_bps", [](Scenario& s, const std::string& v, int ln) { s.earth.bandwidth_bps = parse_double(v, ln); }},
        {"orbit.bandwidth_bps", [](Scenario& s, const std::string& v, int ln) { s.orbit_bandwidth_bps = parse_double(v, ln); }},
        {"app.offload_payload_bits", [](Scenario& s, const std::string& v, int ln) { s.offload_payload_bits = parse_double(v, ln); }},
        {"app.offload_uplink_bps", [](Scenario& s, const std::string& v, int ln) { s.offload_uplink_bps = parse_double(v, ln); }},
        {"app.offload_exec_s", [](Scenario& s, const std::string& v, int ln) { s.offload_exec_s = parse_double(v, ln); }},
        {"app.cache_object_bits", [](Scenario& s, const std::string& v, int ln) { s.cache_object_bits = parse_double(v, ln); }},
        {"app.preprocess_raw_bps", [](Scenario& s, const std::string& v, int ln) { s.preprocess_raw_bps = parse_double(v, ln); }},
        {"app.preprocess_retention", [](Scenario& s, const std::string& v, int ln) { s.preprocess_retention = parse_double(v, ln); }},
        {"app.collab_service_ms", [](Scenario& s, const std::string& v, int ln) { s.collab_service_ms = parse_double(v, ln); }},
        {"handover.policy", [](Scenario& s, const std::string& v, int) { s.handover_policy = v; }},
        {"handover.station", [](Scenario& s, const std::string& v, int) { s.handover_station = v; }},
        {"route.station_a", [](Scenario& s, const std::string& v, int) { s.route_station_a = v; }},
        {"route.station_b", [](Scenario& s, const std::string& v, int) { s.route_station_b = v; }},
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        const size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "scenario line " << line_no << ": expected key=value, got '" << stripped
                << "'";
            throw ValidationError(msg.str());
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key.rfind("mass.edl.", 0) == 0) {
            const std::string component = key.substr(9);
            if (component.empty())
                throw ValidationError("scenario: mass.edl. needs a component name");
            // The first user-supplied component replaces the default set.
            if (!mass_components_replaced) {
                sc.mass.edl_components_kg.clear();
                mass_components_replaced = true;
            }
            sc.mass.edl_components_kg.emplace_back(component, parse_double(value, line_no));
            continue;
        }

        const auto it = setters.find(key);
        if (it == setters.end())
            throw ValidationError("scenario: unknown key '" + key + "'");
        it->second(sc, value, line_no);
    }

    // Range checks, phrased as the modules would reject them.
    try {
        sc.body.validate();
        sc.walker.validate();
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    if (!(sc.dt_s > 0.0)) throw ValidationError("time.dt_s must be > 0");
    if (sc.t1_s >= 0.0 && !(sc.t1_s > sc.t0_s))
        throw ValidationError("time.t1_s must exceed time.t0_s");
    if (!(sc.grid_deg > 0.0 && sc.grid_deg <= 30.0))
        throw ValidationError("grid.resolution_deg must lie in (0, 30]");
    if (!(sc.min_elevation_deg >= 0.0 && sc.min_elevation_deg < 90.0))
        throw ValidationError("coverage.min_elevation_deg must lie in [0, 90)");
    if (sc.processing_delay_ms < 0.0)
        throw ValidationError("coverage.processing_delay_ms must be >= 0");
    if (!(sc.link_reference_power_w > 0.0))
        throw ValidationError("link.reference_power_w must be > 0");
    if (!(sc.link_reference_rate_bps > 0.0))
        throw ValidationError("link.reference_rate_bps must be > 0");
    if (sc.dust_attenuation_db < 0.0)
        throw ValidationError("link.dust_attenuation_db must be >= 0");
    if (sc.soft_error_rate_per_day < 0.0 || sc.soft_error_processors < 0.0 ||
        sc.soft_error_days < 0.0)
        throw ValidationError("softerror.* values must be >= 0");
    if (!(sc.mass.payload_kg > 0.0)) throw ValidationError("mass.payload_kg must be > 0");
    for (const auto& [name, kg] : sc.mass.edl_components_kg)
        if (kg < 0.0) throw ValidationError("mass.edl." + name + " must be >= 0");
    if (!(sc.earth.rtt_s > 0.0 && sc.earth.bandwidth_bps > 0.0))
        throw ValidationError("earth.* values must be > 0");
    if (!(sc.orbit_bandwidth_bps > 0.0))
        throw ValidationError("orbit.bandwidth_bps must be > 0");
    if (sc.offload_payload_bits < 0.0 || !(sc.offload_uplink_bps > 0.0) ||
        sc.offload_exec_s < 0.0)
        throw ValidationError("app.offload_* values out of range");
    if (sc.cache_object_bits < 0.0)
        throw ValidationError("app.cache_object_bits must be >= 0");
    if (sc.preprocess_raw_bps < 0.0)
        throw ValidationError("app.preprocess_raw_bps must be >= 0");
    if (!(sc.preprocess_retention >= 0.0 && sc.preprocess_retention <= 1.0))
        throw ValidationError("app.preprocess_retention must lie in [0, 1]");
    if (sc.collab_service_ms < 0.0)
        throw ValidationError("app.collab_service_ms must be >= 0");
    try {
        handover_policy_from_string(sc.handover_policy);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    return sc;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file: " + path);
    return parse_scenario(in);
}

std::string effective_config(const Scenario& sc) {
    std::map<std::string, std::string> kv;
    kv["body.radius_km"] = fmt_cfg(sc.body.radius_km);
    kv["body.gm_km3_s2"] = fmt_cfg(sc.body.gm_km3_s2);
    kv["body.rotation_period_s"] = fmt_cfg(sc.body.rotation_period_s);
    kv["walker.planes"] = std::to_string(sc.walker.planes);
    kv["walker.sats_per_plane"] = std::to_string(sc.walker.sats_per_plane);
    kv["walker.altitude_km"] = fmt_cfg(sc.walker.altitude_km);
    kv["walker.inclination_deg"] = fmt_cfg(sc.walker.inclination_deg);
    kv["walker.raan_spread_deg"] = fmt_cfg(sc.walker.raan_spread_deg);
    kv["walker.phasing_offset_deg"] = fmt_cfg(sc.walker.phasing_offset_deg);
    kv["network.cross_seam"] = sc.cross_seam ? "true" : "false";
    kv["stations.catalog"] = sc.stations_catalog.empty() ? "<builtin>" : sc.stations_catalog;
    kv["time.t0_s"] = fmt_cfg(sc.t0_s);
    kv["time.t1_s"] = fmt_cfg(sc.window_end_s());
    kv["time.dt_s"] = fmt_cfg(sc.dt_s);
    kv["grid.resolution_deg"] = fmt_cfg(sc.grid_deg);
    kv["coverage.min_elevation_deg"] = fmt_cfg(sc.min_elevation_deg);
    kv["coverage.processing_delay_ms"] = fmt_cfg(sc.processing_delay_ms);
    kv["link.reference_power_w"] = fmt_cfg(sc.link_reference_power_w);
    kv["link.reference_rate_bps"] = fmt_cfg(sc.link_reference_rate_bps);
    kv["link.dust_attenuation_db"] = fmt_cfg(sc.dust_attenuation_db);
    kv["softerror.rate_per_day"] = fmt_cfg(sc.soft_error_rate_per_day);
    kv["softerror.processors"] =
        fmt_cfg(sc.soft_error_processors > 0.0
                    ? sc.soft_error_processors
                    : static_cast<double>(sc.walker.planes) * sc.walker.sats_per_plane);
    kv["softerror.days"] = fmt_cfg(sc.soft_error_days);
    kv["mass.payload_kg"] = fmt_cfg(sc.mass.payload_kg);
    for (const auto& [name, mass_kg] : sc.mass.edl_components_kg)
        kv["mass.edl." + name] = fmt_cfg(mass_kg);
    kv["earth.rtt_s"] = fmt_cfg(sc.earth.rtt_s);
    kv["earth.bandwidth_bps"] = fmt_cfg(sc.earth.bandwidth_bps);
    kv["orbit.bandwidth_bps"] = fmt_cfg(sc.orbit_bandwidth_bps);
    kv["app.offload_payload_bits"] = fmt_cfg(sc.offload_payload_bits);
    kv["app.offload_uplink_bps"] = fmt_cfg(sc.offload_uplink_bps);
    kv["app.offload_exec_s"] = fmt_cfg(sc.offload_exec_s);
    kv["app.cache_object_bits"] = fmt_cfg(sc.cache_object_bits);
    kv["app.preprocess_raw_bps"] = fmt_cfg(sc.preprocess_raw_bps);
    kv["app.preprocess_retention"] = fmt_cfg(sc.preprocess_retention);
    kv["app.collab_service_ms"] = fmt_cfg(sc.collab_service_ms);
    kv["handover.policy"] = sc.handover_policy;
    kv["handover.station"] = sc.handover_station.empty() ? "<all>" : sc.handover_station;
    kv["route.station_a"] = sc.route_station_a.empty() ? "<all>" : sc.route_station_a;
    kv["route.station_b"] = sc.route_station_b.empty() ? "<all>" : sc.route_station_b;

    std::string out;
    for (const auto& [key, value] : kv) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    }
    return out;
}

}  // namespace marsnet
