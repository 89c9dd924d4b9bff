#include "marsnet/appmodels.hpp"

#include <stdexcept>

namespace marsnet {

void EarthLink::validate() const {
    if (!(rtt_s > 0.0)) throw std::invalid_argument("earth link rtt_s must be > 0");
    if (!(bandwidth_bps > 0.0))
        throw std::invalid_argument("earth link bandwidth_bps must be > 0");
}

void OrbitLink::validate() const {
    if (!(rtt_ms > 0.0)) throw std::invalid_argument("orbit link rtt_ms must be > 0");
    if (!(bandwidth_bps > 0.0))
        throw std::invalid_argument("orbit link bandwidth_bps must be > 0");
}

double offload_latency_s(double payload_bits, double uplink_bps, double exec_time_s,
                         const OrbitLink& orbit) {
    if (payload_bits < 0.0) throw std::invalid_argument("offload payload_bits must be >= 0");
    if (!(uplink_bps > 0.0)) throw std::invalid_argument("offload uplink_bps must be > 0");
    if (exec_time_s < 0.0) throw std::invalid_argument("offload exec_time_s must be >= 0");
    orbit.validate();
    return payload_bits / uplink_bps + exec_time_s + orbit.rtt_ms / 1000.0;
}

std::optional<double> collaboration_latency_ms(const TopologySnapshot& snap, int station_a,
                                               int station_b) {
    const auto route = shortest_path(snap, station_a, station_b);
    if (!route) return std::nullopt;
    return route->delay_ms;
}

double cache_fetch_latency_s(double object_bits, bool hit, const EarthLink& earth,
                             const OrbitLink& orbit) {
    if (object_bits < 0.0) throw std::invalid_argument("cache object_bits must be >= 0");
    earth.validate();
    orbit.validate();
    const double orbital_terms = orbit.rtt_ms / 1000.0 + object_bits / orbit.bandwidth_bps;
    if (hit) return orbital_terms;
    return earth.rtt_s + object_bits / earth.bandwidth_bps + orbital_terms;
}

UplinkRate preprocess_uplink_rate(double raw_bps, double retention_fraction,
                                  const EarthLink& earth) {
    if (raw_bps < 0.0) throw std::invalid_argument("preprocess raw_bps must be >= 0");
    if (!(retention_fraction >= 0.0 && retention_fraction <= 1.0))
        throw std::domain_error("retention_fraction must lie in [0, 1]");
    earth.validate();
    const double rate = raw_bps * retention_fraction;
    return {rate, rate <= earth.bandwidth_bps};
}

}  // namespace marsnet
