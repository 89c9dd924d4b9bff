#include "marsnet/runner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "marsnet/coverage.hpp"
#include "marsnet/format.hpp"
#include "marsnet/version.hpp"

namespace marsnet {

namespace {

std::vector<std::string> comment_block(const Scenario& sc, const std::string& command) {
    std::vector<std::string> lines;
    lines.push_back(std::string("marsnet ") + MARSNET_VERSION);
    lines.push_back("command: " + command);
    std::istringstream cfg(effective_config(sc));
    std::string line;
    while (std::getline(cfg, line)) lines.push_back(line);
    return lines;
}

class ReportFile {
  public:
    ReportFile(const std::filesystem::path& dir, const std::string& name, const Scenario& sc,
               const std::string& command)
        : path_((dir / name).string()), out_(path_) {
        if (!out_) throw std::runtime_error("cannot write output file: " + path_);
        for (const auto& line : comment_block(sc, command)) out_ << "# " << line << "\n";
    }

    std::ofstream& stream() { return out_; }

    void close() {
        out_.close();
        if (!out_) throw std::runtime_error("failed writing output file: " + path_);
    }

  private:
    std::string path_;
    std::ofstream out_;
};

struct Context {
    const Scenario& sc;
    std::filesystem::path out_dir;
    BodyParameters body;
    Constellation constellation;
    std::vector<GroundStation> stations;

    // Shared geometry anchors: everything is quoted at the minimum elevation
    // (edge of coverage, the worst case) unless named otherwise.
    double synchronous_altitude;
    double slant_synchronous;
    double slant_walker;
    double slant_1000;

    explicit Context(const Scenario& scenario, const std::string& output_dir)
        : sc(scenario), out_dir(output_dir), body(scenario.body),
          constellation(scenario.constellation()), stations(scenario.stations()) {
        synchronous_altitude = synchronous_altitude_km(body);
        slant_synchronous =
            slant_range_km(body.radius_km, synchronous_altitude, sc.min_elevation_deg);
        slant_walker =
            slant_range_km(body.radius_km, sc.walker.altitude_km, sc.min_elevation_deg);
        slant_1000 = slant_range_km(body.radius_km, 1000.0, sc.min_elevation_deg);
    }

    CoverageOptions coverage_options() const {
        CoverageOptions opt;
        opt.grid_deg = sc.grid_deg;
        opt.t0_s = sc.t0_s;
        opt.t1_s = sc.window_end_s();
        opt.dt_s = sc.dt_s;
        opt.min_elevation_deg = sc.min_elevation_deg;
        opt.processing_delay_ms = sc.processing_delay_ms;
        return opt;
    }

    std::vector<double> sample_times() const {
        const double t0 = sc.t0_s;
        const double t1 = sc.window_end_s();
        const int n = static_cast<int>(std::floor((t1 - t0) / sc.dt_s + 1e-9)) + 1;
        std::vector<double> times(n);
        for (int i = 0; i < n; ++i) times[i] = t0 + i * sc.dt_s;
        return times;
    }
};

void write_quantity_row(std::ofstream& out, const std::string& quantity, double value,
                        const std::string& unit) {
    out << quantity << ',' << fmt_sig(value) << ',' << unit << "\n";
}

void run_coverage(const Context& ctx) {
    const CoverageReport report = coverage_report(ctx.body, ctx.constellation,
                                                  ctx.coverage_options());
    ReportFile file(ctx.out_dir, "coverage.csv", ctx.sc, "coverage");
    write_coverage_csv(file.stream(), report, {});
    file.close();
}

void run_rtt(const Context& ctx) {
    ReportFile file(ctx.out_dir, "rtt.csv", ctx.sc, "rtt");
    auto& out = file.stream();
    const double radius = ctx.body.radius_km;
    const double elev = ctx.sc.min_elevation_deg;
    const double alpha_sync = coverage_half_angle_deg(radius, ctx.synchronous_altitude, elev);
    const double alpha_walker =
        coverage_half_angle_deg(radius, ctx.sc.walker.altitude_km, elev);

    // The 1,000 km row is a reference point for the "90% RTT reduction"
    // narrative; geometry gives ~11.4 ms where that narrative rounds to 12 ms.
    out << "# note: rtt_1000km_edge_ms is the geometric value; coarse summaries"
           " often round it up to 12 ms\n";
    out << "quantity,value,unit\n";
    write_quantity_row(out, "areostationary_altitude_km", ctx.synchronous_altitude, "km");
    write_quantity_row(out, "walker_orbital_period_s",
                       orbital_period_s(ctx.body, CircularOrbit(ctx.sc.walker.altitude_km,
                                                                ctx.sc.walker.inclination_deg,
                                                                0.0, 0.0)),
                       "s");
    write_quantity_row(out, "coverage_half_angle_areostationary_deg", alpha_sync, "deg");
    write_quantity_row(out, "coverage_half_angle_walker_deg", alpha_walker, "deg");
    write_quantity_row(out, "min_equatorial_ring_areostationary",
                       min_equatorial_ring(alpha_sync), "count");
    write_quantity_row(out, "slant_range_areostationary_km", ctx.slant_synchronous, "km");
    write_quantity_row(out, "slant_range_walker_km", ctx.slant_walker, "km");
    write_quantity_row(out, "slant_range_1000km_km", ctx.slant_1000, "km");
    write_quantity_row(out, "rtt_areostationary_edge_ms", rtt_ms(ctx.slant_synchronous), "ms");
    write_quantity_row(out, "rtt_walker_edge_ms", rtt_ms(ctx.slant_walker), "ms");
    write_quantity_row(out, "rtt_walker_zenith_ms", rtt_ms(ctx.sc.walker.altitude_km), "ms");
    write_quantity_row(out, "rtt_1000km_edge_ms", rtt_ms(ctx.slant_1000), "ms");
    file.close();
}

std::vector<std::pair<int, int>> route_pairs(const Context& ctx) {
    const int n = static_cast<int>(ctx.stations.size());
    auto find_station = [&](const std::string& name) {
        for (int i = 0; i < n; ++i)
            if (ctx.stations[i].name == name) return i;
        throw ValidationError("route: unknown station '" + name + "'");
    };

    std::vector<std::pair<int, int>> pairs;
    if (!ctx.sc.route_station_a.empty() || !ctx.sc.route_station_b.empty()) {
        if (ctx.sc.route_station_a.empty() || ctx.sc.route_station_b.empty())
            throw ValidationError("route: set both route.station_a and route.station_b");
        pairs.emplace_back(find_station(ctx.sc.route_station_a),
                           find_station(ctx.sc.route_station_b));
        return pairs;
    }
    if (n < 2) throw ValidationError("route needs at least two ground stations");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    return pairs;
}

void run_route(const Context& ctx) {
    const auto pairs = route_pairs(ctx);
    const IslTopology topo = build_plus_grid(ctx.sc.walker.planes, ctx.sc.walker.sats_per_plane,
                                             ctx.sc.cross_seam);
    const std::vector<double> times = ctx.sample_times();

    // Steps are independent; build each step's rows in place and write them
    // in step order so the file does not depend on the schedule.
    std::vector<std::string> blocks(times.size());
#pragma omp parallel for schedule(static)
    for (int s = 0; s < static_cast<int>(times.size()); ++s) {
        const double t = times[s];
        const TopologySnapshot snap = snapshot(ctx.body, ctx.constellation, topo, ctx.stations, t);
        std::string& block = blocks[s];
        for (const auto& [a, b] : pairs) {
            const auto route = shortest_path(snap, snap.station_node(a), snap.station_node(b));
            block += fmt_sig(t) + ',' + ctx.stations[a].name + ',' + ctx.stations[b].name + ',';
            if (!route) {
                block += "unreachable,,\n";
                continue;
            }
            block += fmt_sig(route->delay_ms) + ',' + std::to_string(route->hops) + ',';
            for (size_t i = 0; i < route->nodes.size(); ++i) {
                if (i) block += '|';
                block += snap.labels[route->nodes[i]];
            }
            block += '\n';
        }
    }

    ReportFile file(ctx.out_dir, "route.csv", ctx.sc, "route");
    auto& out = file.stream();
    out << "t_s,src,dst,delay_ms,hops,path\n";
    for (const std::string& block : blocks) out << block;
    file.close();
}

void run_handover(const Context& ctx) {
    const HandoverPolicy policy = handover_policy_from_string(ctx.sc.handover_policy);
    std::vector<const GroundStation*> chosen;
    if (ctx.sc.handover_station.empty()) {
        for (const auto& st : ctx.stations) chosen.push_back(&st);
    } else {
        for (const auto& st : ctx.stations)
            if (st.name == ctx.sc.handover_station) chosen.push_back(&st);
        if (chosen.empty())
            throw ValidationError("handover: unknown station '" + ctx.sc.handover_station + "'");
    }
    if (chosen.empty()) throw ValidationError("handover needs at least one ground station");

    ReportFile file(ctx.out_dir, "handover.csv", ctx.sc, "handover");
    auto& out = file.stream();
    out << "t_start_s,t_end_s,station,satellite\n";
    for (const GroundStation* st : chosen) {
        const auto timeline = handover_timeline(ctx.body, ctx.constellation, *st, ctx.sc.t0_s,
                                                ctx.sc.window_end_s(), ctx.sc.dt_s, policy);
        for (const auto& interval : timeline) {
            out << fmt_sig(interval.t_start_s) << ',' << fmt_sig(interval.t_end_s) << ','
                << st->name << ',';
            if (interval.satellite < 0) {
                out << "none\n";
            } else {
                out << "sat" << ctx.constellation.plane_of(interval.satellite) << '-'
                    << ctx.constellation.slot_of(interval.satellite) << "\n";
            }
        }
    }
    file.close();
}

void run_linkbudget(const Context& ctx) {
    ReportFile file(ctx.out_dir, "linkbudget.csv", ctx.sc, "linkbudget");
    auto& out = file.stream();
    out << "# power scaling uses edge-of-coverage slant ranges at the minimum"
           " elevation; zenith rows give the nadir alternative\n";
    out << "# dust attenuation is the static worst case; global storms recur roughly every "
        << fmt_sig(GLOBAL_DUST_STORM_INTERVAL_YEARS) << " Earth years on average\n";
    out << "quantity,value,unit\n";

    const LinkReference ref{ctx.sc.link_reference_power_w, ctx.sc.link_reference_rate_bps,
                            ctx.slant_synchronous};
    write_quantity_row(out, "reference_power_w", ref.power_w, "W");
    write_quantity_row(out, "reference_rate_bps", ref.data_rate_bps, "bps");
    write_quantity_row(out, "reference_distance_km", ref.distance_km, "km");
    write_quantity_row(out, "power_walker_edge_w", scale_power_w(ref, ctx.slant_walker), "W");
    write_quantity_row(out, "power_1000km_edge_w", scale_power_w(ref, ctx.slant_1000), "W");

    const LinkReference nadir_ref{ctx.sc.link_reference_power_w, ctx.sc.link_reference_rate_bps,
                                  ctx.synchronous_altitude};
    write_quantity_row(out, "power_walker_zenith_w",
                       scale_power_w(nadir_ref, ctx.sc.walker.altitude_km), "W");
    write_quantity_row(out, "power_1000km_zenith_w", scale_power_w(nadir_ref, 1000.0), "W");

    write_quantity_row(out, "dust_attenuation_db", ctx.sc.dust_attenuation_db, "dB");
    write_quantity_row(out, "dust_attenuation_factor",
                       attenuation_factor(ctx.sc.dust_attenuation_db), "ratio");

    const double processors = ctx.sc.soft_error_processors > 0.0
                                  ? ctx.sc.soft_error_processors
                                  : static_cast<double>(ctx.constellation.size());
    write_quantity_row(out, "soft_error_rate_per_processor_day",
                       ctx.sc.soft_error_rate_per_day, "1/day");
    write_quantity_row(out, "soft_error_processors", processors, "count");
    write_quantity_row(out, "soft_error_days", ctx.sc.soft_error_days, "day");
    write_quantity_row(out, "expected_soft_errors",
                       expected_soft_errors(ctx.sc.soft_error_rate_per_day, processors,
                                            ctx.sc.soft_error_days),
                       "count");
    file.close();
}

void run_mass(const Context& ctx) {
    const MassOverhead overhead = mass_overhead(ctx.sc.mass);
    ReportFile file(ctx.out_dir, "mass.csv", ctx.sc, "mass");
    auto& out = file.stream();
    out << "quantity,value,unit\n";
    write_quantity_row(out, "payload_kg", ctx.sc.mass.payload_kg, "kg");
    for (const auto& [name, kg] : ctx.sc.mass.edl_components_kg)
        write_quantity_row(out, "edl_" + name + "_kg", kg, "kg");
    write_quantity_row(out, "edl_total_kg", overhead.edl_total_kg, "kg");
    write_quantity_row(out, "overhead_ratio", overhead.overhead_ratio, "ratio");
    file.close();
}

void run_apps(const Context& ctx) {
    ReportFile file(ctx.out_dir, "apps.csv", ctx.sc, "apps");
    auto& out = file.stream();
    out << "scenario,quantity,value,unit,assumptions\n";

    const OrbitLink orbit{rtt_ms(ctx.slant_walker) + ctx.sc.processing_delay_ms,
                          ctx.sc.orbit_bandwidth_bps};
    const OrbitLink orbit_sync{rtt_ms(ctx.slant_synchronous) + ctx.sc.processing_delay_ms,
                               ctx.sc.orbit_bandwidth_bps};
    const std::string orbit_note = "orbit_rtt=edge-of-coverage; orbit_bw=" +
                                   fmt_sig(ctx.sc.orbit_bandwidth_bps) + " bps (assumed)";

    out << "offload,latency_s,"
        << fmt_sig(offload_latency_s(ctx.sc.offload_payload_bits, ctx.sc.offload_uplink_bps,
                                     ctx.sc.offload_exec_s, orbit))
        << ",s," << orbit_note << "\n";
    out << "offload,latency_areostationary_s,"
        << fmt_sig(offload_latency_s(ctx.sc.offload_payload_bits, ctx.sc.offload_uplink_bps,
                                     ctx.sc.offload_exec_s, orbit_sync))
        << ",s," << orbit_note << "\n";

    // Collaboration: scan the window for the configured (or first) pair.
    if (ctx.stations.size() >= 2) {
        int a = 0, b = 1;
        if (!ctx.sc.route_station_a.empty() && !ctx.sc.route_station_b.empty()) {
            const auto pairs = route_pairs(ctx);
            a = pairs.front().first;
            b = pairs.front().second;
        }
        const IslTopology topo = build_plus_grid(ctx.sc.walker.planes,
                                                 ctx.sc.walker.sats_per_plane, ctx.sc.cross_seam);
        const std::vector<double> times = ctx.sample_times();
        std::vector<double> per_step(times.size(), -1.0);
#pragma omp parallel for schedule(static)
        for (int s = 0; s < static_cast<int>(times.size()); ++s) {
            const TopologySnapshot snap =
                snapshot(ctx.body, ctx.constellation, topo, ctx.stations, times[s]);
            const auto delay =
                collaboration_latency_ms(snap, snap.station_node(a), snap.station_node(b));
            if (delay) per_step[s] = *delay + ctx.sc.collab_service_ms;
        }
        std::vector<double> delays;
        for (const double d : per_step)
            if (d >= 0.0) delays.push_back(d);
        const int total = static_cast<int>(times.size());
        const std::string pair_note = "pair=" + ctx.stations[a].name + ":" +
                                      ctx.stations[b].name + "; service_ms=" +
                                      fmt_sig(ctx.sc.collab_service_ms);
        if (!delays.empty()) {
            std::sort(delays.begin(), delays.end());
            const double median = delays[delays.size() / 2];
            out << "collaboration,one_way_min_ms," << fmt_sig(delays.front()) << ",ms,"
                << pair_note << "\n";
            out << "collaboration,one_way_median_ms," << fmt_sig(median) << ",ms," << pair_note
                << "\n";
            out << "collaboration,one_way_max_ms," << fmt_sig(delays.back()) << ",ms,"
                << pair_note << "\n";
        }
        out << "collaboration,reachable_fraction,"
            << fmt_sig(total > 0 ? static_cast<double>(delays.size()) / total : 0.0) << ",ratio,"
            << pair_note << "\n";
    }

    const std::string earth_note = "earth_rtt=" + fmt_sig(ctx.sc.earth.rtt_s) +
                                   " s; earth_bw=" + fmt_sig(ctx.sc.earth.bandwidth_bps) +
                                   " bps; " + orbit_note;
    out << "cache,fetch_miss_s,"
        << fmt_sig(cache_fetch_latency_s(ctx.sc.cache_object_bits, false, ctx.sc.earth, orbit))
        << ",s," << earth_note << "\n";
    out << "cache,fetch_hit_s,"
        << fmt_sig(cache_fetch_latency_s(ctx.sc.cache_object_bits, true, ctx.sc.earth, orbit))
        << ",s," << earth_note << "\n";

    const UplinkRate uplink = preprocess_uplink_rate(ctx.sc.preprocess_raw_bps,
                                                     ctx.sc.preprocess_retention, ctx.sc.earth);
    out << "preprocess,uplink_rate_bps," << fmt_sig(uplink.rate_bps) << ",bps,retention="
        << fmt_sig(ctx.sc.preprocess_retention) << "\n";
    out << "preprocess,fits_earth_link," << (uplink.fits_earth_link ? 1 : 0)
        << ",flag,earth_bw=" << fmt_sig(ctx.sc.earth.bandwidth_bps) << " bps\n";
    file.close();
}

void write_effective_config(const Context& ctx) {
    const auto path = ctx.out_dir / "effective_config.cfg";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path.string());
    out << "# marsnet " << MARSNET_VERSION << " effective configuration\n";
    out << effective_config(ctx.sc);
    out.close();
    if (!out) throw std::runtime_error("failed writing output file: " + path.string());
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"coverage",   "rtt",  "route", "handover",
                                                   "linkbudget", "mass", "apps",  "all"};
    return names;
}

void run_command(const std::string& command, const Scenario& scenario,
                 const std::string& output_dir) {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), command) == names.end())
        throw ValidationError("unknown command '" + command + "'");

    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec)
        throw std::runtime_error("cannot create output directory " + output_dir + ": " +
                                 ec.message());

    Context ctx(scenario, output_dir);
    write_effective_config(ctx);

    const bool all = command == "all";
    if (all || command == "coverage") run_coverage(ctx);
    if (all || command == "rtt") run_rtt(ctx);
    if (all || command == "route") run_route(ctx);
    if (all || command == "handover") run_handover(ctx);
    if (all || command == "linkbudget") run_linkbudget(ctx);
    if (all || command == "mass") run_mass(ctx);
    if (all || command == "apps") run_apps(ctx);
}

}  // namespace marsnet
