// Inter-satellite-link topology, time-varying network snapshots with ground
// links, shortest-path routing, and handover timelines.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "marsnet/constellation.hpp"

namespace marsnet {

/// Static ISL edge set over flat satellite indices (plane * S + slot).
/// Every satellite links to its intra-plane neighbors (slot +-1 mod S) and
/// the same slot in each adjacent plane; the seam planes lack the outward
/// inter-plane link unless cross_seam is set.
struct IslTopology {
    int planes{};
    int sats_per_plane{};
    bool cross_seam{};
    std::vector<std::pair<int, int>> edges;
};

// Throws std::invalid_argument for planes < 1 or sats_per_plane < 3 (the
// intra-plane ring would be degenerate).
IslTopology build_plus_grid(int planes, int sats_per_plane, bool cross_seam);

/// The network at one instant: satellites then ground stations, undirected
/// edges weighted by one-way propagation delay in ms. Ground edges exist to
/// every satellite above the station's minimum elevation.
struct TopologySnapshot {
    double time_s{};
    int satellite_count{};
    int station_count{};
    std::vector<Vec3> positions;       // inertial, km; satellites first
    std::vector<std::string> labels;   // "sat<plane>-<slot>" or station name
    std::vector<std::vector<std::pair<int, double>>> adjacency;  // (node, one-way ms)

    int node_count() const { return satellite_count + station_count; }
    int station_node(int station_index) const { return satellite_count + station_index; }
    // Index of the named node, or -1.
    int find_node(const std::string& label) const;
};

TopologySnapshot snapshot(const BodyParameters& body, const Constellation& constellation,
                          const IslTopology& topology,
                          const std::vector<GroundStation>& stations, double t_s);

struct Route {
    std::vector<int> nodes;  // src..dst; single node when src == dst
    double delay_ms{};       // one-way
    int hops{};
};

// Minimal one-way delay route; ties broken toward the lexicographically
// smallest node index sequence. Empty optional when dst is unreachable.
std::optional<Route> shortest_path(const TopologySnapshot& snap, int src, int dst);

enum class HandoverPolicy { MaxElevation, MinRtt };

// Parses "max-elevation" / "min-rtt"; throws std::invalid_argument otherwise.
HandoverPolicy handover_policy_from_string(const std::string& name);
std::string to_string(HandoverPolicy policy);

/// One maximal interval with a constant serving satellite (-1 = none).
/// Intervals tile [t0, t1] exactly.
struct ServingInterval {
    double t_start_s{};
    double t_end_s{};
    int satellite = -1;
};

std::vector<ServingInterval> handover_timeline(const BodyParameters& body,
                                               const Constellation& constellation,
                                               const GroundStation& station, double t0_s,
                                               double t1_s, double dt_s,
                                               HandoverPolicy policy);

// Interval boundaries, counting gaps: interval count - 1 (0 for <= 1).
int handover_count(const std::vector<ServingInterval>& timeline);

}  // namespace marsnet
