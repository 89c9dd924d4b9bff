// End-to-end latency and bandwidth models for constellation applications:
// offloading, multi-party collaboration, pull-through caching, and
// pre-processing of data relayed to Earth.

#pragma once

#include <optional>

#include "marsnet/network.hpp"

namespace marsnet {

/// The deep-space relay link: six-minute RTT, 40.5 kbit/s.
struct EarthLink {
    double rtt_s = 360.0;
    double bandwidth_bps = 40500.0;

    void validate() const;
};

/// Ground-to-constellation access link. Bandwidth is an assumption, not a
/// measured figure; it is labeled as such in all outputs.
struct OrbitLink {
    double rtt_ms = 12.5;
    double bandwidth_bps = 100e6;

    void validate() const;
};

// Upload-and-execute round trip: payload/uplink + exec_time + orbital RTT.
double offload_latency_s(double payload_bits, double uplink_bps, double exec_time_s,
                         const OrbitLink& orbit);

// One-way network delay between two station nodes of a snapshot; empty when
// no path exists.
std::optional<double> collaboration_latency_ms(const TopologySnapshot& snap, int station_a,
                                               int station_b);

// Miss: Earth RTT + transfer over the Earth link + orbital RTT + transfer
// over the access link. Hit: orbital terms only.
double cache_fetch_latency_s(double object_bits, bool hit, const EarthLink& earth,
                             const OrbitLink& orbit);

struct UplinkRate {
    double rate_bps{};
    bool fits_earth_link{};
};

// raw_bps * retention_fraction, with a flag telling whether the result fits
// the Earth link. Throws std::domain_error for retention outside [0, 1].
UplinkRate preprocess_uplink_rate(double raw_bps, double retention_fraction,
                                  const EarthLink& earth);

}  // namespace marsnet
