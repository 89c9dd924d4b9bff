// Scenario files: a flat key=value format (one assignment per line, '#'
// comments) with every knob defaulted to the standard 9x9 Mars design.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "marsnet/appmodels.hpp"
#include "marsnet/constellation.hpp"
#include "marsnet/feasibility.hpp"

namespace marsnet {

/// Scenario problems a user can fix: unknown keys, bad values, out-of-range
/// numbers, missing referenced files. The CLI maps these to exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Scenario {
    BodyParameters body;
    WalkerConfig walker;
    bool cross_seam = false;

    std::string stations_catalog;  // empty: built-in landing-site catalog

    double t0_s = 0.0;
    double t1_s = -1.0;  // < 0: one orbital period from t0
    double dt_s = 10.0;
    double grid_deg = 2.0;
    double min_elevation_deg = 25.0;
    double processing_delay_ms = 0.0;

    double link_reference_power_w = 10.0;
    double link_reference_rate_bps = 1000.0;
    double dust_attenuation_db = 3.0;
    double soft_error_rate_per_day = 1e-3;
    double soft_error_processors = 0.0;  // 0: use the constellation size
    double soft_error_days = 1.0;

    MassBudget mass = mars2020_mass_budget();

    EarthLink earth;
    double orbit_bandwidth_bps = 100e6;
    double offload_payload_bits = 8e6;
    double offload_uplink_bps = 1e6;
    double offload_exec_s = 0.5;
    double cache_object_bits = 8e6;
    double preprocess_raw_bps = 405000.0;
    double preprocess_retention = 0.1;
    double collab_service_ms = 0.0;  // additive on-path service time

    std::string handover_policy = "max-elevation";
    std::string handover_station;                   // empty: all stations
    std::string route_station_a, route_station_b;   // empty: all pairs

    // Loaded catalog or the built-in default.
    std::vector<GroundStation> stations() const;
    Constellation constellation() const;
    // t1 resolved to one orbital period when unset.
    double window_end_s() const;
};

// Throws ValidationError for unknown keys, type mismatches (with line
// numbers), and values outside module preconditions.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_file(const std::string& path);

// Canonical key=value dump of every effective setting, sorted by key; this
// is what lands in output comment blocks and effective_config.cfg.
std::string effective_config(const Scenario& scenario);

}  // namespace marsnet
