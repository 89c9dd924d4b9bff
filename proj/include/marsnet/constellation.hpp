// Walker constellation generation and ground-station catalogs.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "marsnet/astro.hpp"

namespace marsnet {

/// Walker pattern parameters. Defaults describe the 9x9 polar Star design
/// at 1,120 km used throughout this toolkit.
struct WalkerConfig {
    int planes = 9;
    int sats_per_plane = 9;
    double altitude_km = 1120.0;
    double inclination_deg = 90.0;
    double raan_spread_deg = 180.0;    // 180 = Star, 360 = Delta
    double phasing_offset_deg = 0.0;   // inter-plane phase offset, applied cumulatively

    void validate() const;
};

/// Generated constellation; orbits are ordered by (plane, slot).
struct Constellation {
    WalkerConfig config;
    std::vector<CircularOrbit> orbits;

    int size() const { return static_cast<int>(orbits.size()); }
    int plane_of(int sat_index) const { return sat_index / config.sats_per_plane; }
    int slot_of(int sat_index) const { return sat_index % config.sats_per_plane; }
};

// Plane p gets raan = p * raan_spread / planes; slot s in plane p gets
// phase = s * 360 / sats_per_plane + p * phasing_offset, normalized.
Constellation generate_walker(const WalkerConfig& config);

/// A named surface point with its minimum usable elevation angle.
struct GroundStation {
    std::string name;
    double lat_deg{};
    double lon_deg{};
    double min_elevation_deg = 25.0;
};

// Parses the ground-station catalog CSV. Header must be exactly
//   name,lat_deg,lon_deg,min_elevation_deg
// with the last column optional per row (default 25). '#'-prefixed comment
// lines are skipped; LF and CRLF both accepted. Malformed rows, duplicate
// names, and out-of-range coordinates throw std::runtime_error naming the
// offending line.
std::vector<GroundStation> load_ground_stations(std::istream& in);
std::vector<GroundStation> load_ground_stations_file(const std::string& path);

// Built-in catalog of well-known Mars landing sites, used when a scenario
// names no catalog file. Identical to data/ground_stations.csv.
const std::vector<GroundStation>& default_ground_stations();

}  // namespace marsnet
