// Visibility geometry (elevation, slant range, coverage cones), RTT, and
// planet-wide coverage reports over a lat/lon grid and time window.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "marsnet/astro.hpp"
#include "marsnet/constellation.hpp"

namespace marsnet {

// Body-central half-angle of one satellite's coverage cone at the given
// minimum elevation: arccos(R cos e / (R+h)) - e.
double coverage_half_angle_deg(double radius_km, double altitude_km, double min_elevation_deg);

// Satellites needed for a contiguous equatorial ring: ceil(180 / alpha).
// Throws std::domain_error for alpha <= 0.
int min_equatorial_ring(double half_angle_deg);

// Line-of-sight distance to a satellite seen at elevation e:
// sqrt((R+h)^2 - R^2 cos^2 e) - R sin e.
double slant_range_km(double radius_km, double altitude_km, double elevation_deg);

// Out-and-back propagation delay at vacuum light speed, ms.
double rtt_ms(double distance_km);

// Elevation of the satellite above the station's local horizon plane, both
// positions in the same frame; negative below the horizon. Throws
// std::domain_error for coincident positions.
double elevation_deg(const Vec3& station_pos, const Vec3& satellite_pos);

struct CoverageOptions {
    double grid_deg = 2.0;             // lat/lon grid resolution, must lie in (0, 30]
    double t0_s = 0.0;
    double t1_s = -1.0;                // < 0: one orbital period from t0
    double dt_s = 10.0;
    double min_elevation_deg = 25.0;
    double processing_delay_ms = 0.0;  // additive constant on every reported RTT
};

struct LatitudeBandStats {
    double lat_deg;           // band center
    double covered_fraction;  // fraction of point x time samples with >= 1 visible satellite
    double max_rtt_ms;        // over covered samples, RTT to the nearest visible satellite
    double mean_rtt_ms;
};

struct CoverageReport {
    CoverageOptions options;  // effective values (t1 resolved)
    int grid_lat_count{};
    int grid_lon_count{};
    int step_count{};
    double covered_fraction{};  // cos(lat)-weighted, approximates surface-area fraction
    double max_rtt_ms{};
    double mean_rtt_ms{};
    std::vector<LatitudeBandStats> bands;
};

// Evaluates visibility of every grid point at every time step and aggregates
// coverage and RTT-to-nearest-visible statistics. Deterministic: the parallel
// variant partitions work by time step and merges per-step partials in step
// order, so it is bit-identical to the serial reference for any schedule.
CoverageReport coverage_report(const BodyParameters& body, const Constellation& constellation,
                               const CoverageOptions& options);

// Serial reference implementation, kept for testing and benchmarking.
CoverageReport coverage_report_serial(const BodyParameters& body,
                                      const Constellation& constellation,
                                      const CoverageOptions& options);

// CSV with one row per latitude band plus an ALL summary row. Any comment
// lines are emitted first, '#'-prefixed.
void write_coverage_csv(std::ostream& out, const CoverageReport& report,
                        const std::vector<std::string>& comments);

}  // namespace marsnet
