#include "marsnet/network.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "marsnet/coverage.hpp"

namespace marsnet {

IslTopology build_plus_grid(int planes, int sats_per_plane, bool cross_seam) {
    if (planes < 1) throw std::invalid_argument("+GRID needs planes >= 1");
    if (sats_per_plane < 3)
        throw std::invalid_argument("+GRID needs sats_per_plane >= 3 (intra-plane ring)");

    IslTopology topo;
    topo.planes = planes;
    topo.sats_per_plane = sats_per_plane;
    topo.cross_seam = cross_seam;

    const int s_count = sats_per_plane;
    for (int p = 0; p < planes; ++p) {
        for (int s = 0; s < s_count; ++s)
            topo.edges.emplace_back(p * s_count + s, p * s_count + (s + 1) % s_count);
    }
    for (int p = 0; p + 1 < planes; ++p) {
        for (int s = 0; s < s_count; ++s)
            topo.edges.emplace_back(p * s_count + s, (p + 1) * s_count + s);
    }
    if (cross_seam && planes >= 2) {
        for (int s = 0; s < s_count; ++s)
            topo.edges.emplace_back((planes - 1) * s_count + s, s);
    }
    return topo;
}

int TopologySnapshot::find_node(const std::string& label) const {
    for (int i = 0; i < node_count(); ++i)
        if (labels[i] == label) return i;
    return -1;
}

TopologySnapshot snapshot(const BodyParameters& body, const Constellation& constellation,
                          const IslTopology& topology,
                          const std::vector<GroundStation>& stations, double t_s) {
    if (topology.planes != constellation.config.planes ||
        topology.sats_per_plane != constellation.config.sats_per_plane)
        throw std::invalid_argument("ISL topology dimensions do not match the constellation");

    TopologySnapshot snap;
    snap.time_s = t_s;
    snap.satellite_count = constellation.size();
    snap.station_count = static_cast<int>(stations.size());
    snap.positions.reserve(snap.node_count());
    snap.labels.reserve(snap.node_count());

    for (int k = 0; k < constellation.size(); ++k) {
        snap.positions.push_back(propagate(body, constellation.orbits[k], t_s));
        snap.labels.push_back("sat" + std::to_string(constellation.plane_of(k)) + "-" +
                              std::to_string(constellation.slot_of(k)));
    }
    for (const auto& st : stations) {
        snap.positions.push_back(ground_point_position(body, st.lat_deg, st.lon_deg, t_s));
        snap.labels.push_back(st.name);
    }

    snap.adjacency.assign(snap.node_count(), {});
    auto add_edge = [&snap](int a, int b, double one_way_ms) {
        snap.adjacency[a].emplace_back(b, one_way_ms);
        snap.adjacency[b].emplace_back(a, one_way_ms);
    };

    for (const auto& [a, b] : topology.edges) {
        const double d = norm(snap.positions[a] - snap.positions[b]);
        add_edge(a, b, 1000.0 * d / SPEED_OF_LIGHT_KM_S);
    }
    for (int m = 0; m < snap.station_count; ++m) {
        const int node = snap.station_node(m);
        for (int k = 0; k < snap.satellite_count; ++k) {
            if (elevation_deg(snap.positions[node], snap.positions[k]) <
                stations[m].min_elevation_deg)
                continue;
            const double d = norm(snap.positions[k] - snap.positions[node]);
            add_edge(node, k, 1000.0 * d / SPEED_OF_LIGHT_KM_S);
        }
    }
    return snap;
}

namespace {

std::vector<int> materialize_path(const std::vector<int>& parent, int node) {
    std::vector<int> path;
    for (int v = node; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::optional<Route> shortest_path(const TopologySnapshot& snap, int src, int dst) {
    const int n = snap.node_count();
    if (src < 0 || src >= n || dst < 0 || dst >= n)
        throw std::invalid_argument("shortest_path: node index out of range");
    if (src == dst) return Route{{src}, 0.0, 0};

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, kInf);
    std::vector<int> parent(n, -1);
    std::vector<bool> settled(n, false);
    dist[src] = 0.0;

    using QueueEntry = std::pair<double, int>;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
    queue.emplace(0.0, src);

    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (settled[u]) continue;
        settled[u] = true;
        for (const auto& [v, w] : snap.adjacency[u]) {
            if (settled[v]) continue;
            const double nd = d + w;
            bool improve = nd < dist[v];
            if (!improve && nd == dist[v]) {
                // Equal delay: keep the lexicographically smaller node sequence.
                auto current = materialize_path(parent, v);
                auto candidate = materialize_path(parent, u);
                candidate.push_back(v);
                improve = candidate < current;
            }
            if (improve) {
                dist[v] = nd;
                parent[v] = u;
                queue.emplace(nd, v);
            }
        }
    }

    if (dist[dst] == kInf) return std::nullopt;
    Route route;
    route.nodes = materialize_path(parent, dst);
    route.delay_ms = dist[dst];
    route.hops = static_cast<int>(route.nodes.size()) - 1;
    return route;
}

HandoverPolicy handover_policy_from_string(const std::string& name) {
    if (name == "max-elevation") return HandoverPolicy::MaxElevation;
    if (name == "min-rtt") return HandoverPolicy::MinRtt;
    throw std::invalid_argument("unknown handover policy '" + name +
                                "' (expected max-elevation or min-rtt)");
}

std::string to_string(HandoverPolicy policy) {
    return policy == HandoverPolicy::MaxElevation ? "max-elevation" : "min-rtt";
}

std::vector<ServingInterval> handover_timeline(const BodyParameters& body,
                                               const Constellation& constellation,
                                               const GroundStation& station, double t0_s,
                                               double t1_s, double dt_s,
                                               HandoverPolicy policy) {
    if (!(dt_s > 0.0)) throw std::invalid_argument("handover dt_s must be > 0");
    if (!(t1_s >= t0_s)) throw std::invalid_argument("handover window needs t1 >= t0");

    const int n_steps = static_cast<int>(std::floor((t1_s - t0_s) / dt_s + 1e-9)) + 1;
    std::vector<ServingInterval> timeline;

    for (int i = 0; i < n_steps; ++i) {
        const double t = t0_s + i * dt_s;
        const Vec3 ground = ground_point_position(body, station.lat_deg, station.lon_deg, t);

        int serving = -1;
        double best_elevation = -1e9;
        double best_slant = 0.0;
        for (int k = 0; k < constellation.size(); ++k) {
            const Vec3 sat = propagate(body, constellation.orbits[k], t);
            const double el = elevation_deg(ground, sat);
            if (el < station.min_elevation_deg) continue;
            if (policy == HandoverPolicy::MaxElevation) {
                if (el > best_elevation) {
                    best_elevation = el;
                    serving = k;
                }
            } else {
                const double d = norm(sat - ground);
                if (serving == -1 || d < best_slant) {
                    best_slant = d;
                    serving = k;
                }
            }
        }

        if (!timeline.empty() && timeline.back().satellite == serving) {
            timeline.back().t_end_s = std::min(t + dt_s, t1_s);
        } else {
            timeline.push_back({t, std::min(t + dt_s, t1_s), serving});
        }
    }

    // Tile [t0, t1] exactly: each interval ends where the next begins.
    for (size_t i = 0; i + 1 < timeline.size(); ++i)
        timeline[i].t_end_s = timeline[i + 1].t_start_s;
    if (!timeline.empty()) timeline.back().t_end_s = t1_s;
    return timeline;
}

int handover_count(const std::vector<ServingInterval>& timeline) {
    return timeline.empty() ? 0 : static_cast<int>(timeline.size()) - 1;
}

}  // namespace marsnet
