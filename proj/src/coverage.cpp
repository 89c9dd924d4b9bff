#include "marsnet/coverage.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>

#include "marsnet/format.hpp"

namespace marsnet {

double coverage_half_angle_deg(double radius_km, double altitude_km, double min_elevation_deg) {
    const double e = min_elevation_deg * DEG2RAD;
    const double cos_arg = radius_km * std::cos(e) / (radius_km + altitude_km);
    return (std::acos(std::clamp(cos_arg, -1.0, 1.0)) - e) * RAD2DEG;
}

int min_equatorial_ring(double half_angle_deg) {
    if (!(half_angle_deg > 0.0)) throw std::domain_error("coverage half-angle must be > 0");
    return static_cast<int>(std::ceil(180.0 / half_angle_deg));
}

double slant_range_km(double radius_km, double altitude_km, double elevation_deg) {
    const double e = elevation_deg * DEG2RAD;
    const double a = radius_km + altitude_km;
    const double rc = radius_km * std::cos(e);
    return std::sqrt(a * a - rc * rc) - radius_km * std::sin(e);
}

double rtt_ms(double distance_km) { return 2000.0 * distance_km / SPEED_OF_LIGHT_KM_S; }

double elevation_deg(const Vec3& station_pos, const Vec3& satellite_pos) {
    const Vec3 to_sat = satellite_pos - station_pos;
    const double d = norm(to_sat);
    const double r = norm(station_pos);
    if (!(d > 0.0) || !(r > 0.0))
        throw std::domain_error("elevation undefined for coincident positions");
    const double sin_el = dot(station_pos, to_sat) / (r * d);
    return std::asin(std::clamp(sin_el, -1.0, 1.0)) * RAD2DEG;
}

namespace {

struct GridSpec {
    int n_lat;
    int n_lon;
    std::vector<double> lat_deg;  // band centers
    std::vector<double> cos_lat, sin_lat;
    std::vector<double> cos_lon, sin_lon;
};

GridSpec make_grid(double grid_deg) {
    GridSpec g;
    g.n_lat = std::max(1, static_cast<int>(std::lround(180.0 / grid_deg)));
    g.n_lon = std::max(1, static_cast<int>(std::lround(360.0 / grid_deg)));
    const double d_lat = 180.0 / g.n_lat;
    const double d_lon = 360.0 / g.n_lon;
    for (int i = 0; i < g.n_lat; ++i) {
        const double lat = -90.0 + (i + 0.5) * d_lat;
        g.lat_deg.push_back(lat);
        g.cos_lat.push_back(std::cos(lat * DEG2RAD));
        g.sin_lat.push_back(std::sin(lat * DEG2RAD));
    }
    for (int j = 0; j < g.n_lon; ++j) {
        const double lon = -180.0 + (j + 0.5) * d_lon;
        g.cos_lon.push_back(std::cos(lon * DEG2RAD));
        g.sin_lon.push_back(std::sin(lon * DEG2RAD));
    }
    return g;
}

// Per-satellite quantities that do not change over time.
struct SatGeometry {
    double orbit_radius_km;
    double cos_half_angle;  // visibility threshold on the central angle
};

// Evaluates one time step over the whole grid. Visibility uses the central
// angle between grid point and sub-satellite point (equivalent to the
// elevation threshold); RTT goes to the nearest visible satellite. Results
// land in per-band slots for this step so any step schedule merges alike.
void coverage_step(const BodyParameters& body, const Constellation& constellation,
                   const std::vector<SatGeometry>& sat_geometry, const GridSpec& grid,
                   double t_s, double processing_delay_ms, std::int64_t* band_covered,
                   double* band_rtt_sum, double* band_rtt_max) {
    const int n_sats = constellation.size();
    const double body_r2 = body.radius_km * body.radius_km;

    // Satellite unit vectors in the body-fixed frame; the grid stays put.
    std::vector<double> sx(n_sats), sy(n_sats), sz(n_sats);
    for (int k = 0; k < n_sats; ++k) {
        const Vec3 p = body_fixed_from_inertial(body, propagate(body, constellation.orbits[k], t_s), t_s);
        const double a = sat_geometry[k].orbit_radius_km;
        sx[k] = p.x / a;
        sy[k] = p.y / a;
        sz[k] = p.z / a;
    }

    for (int i = 0; i < grid.n_lat; ++i) {
        const double cl = grid.cos_lat[i];
        const double sl = grid.sin_lat[i];
        std::int64_t covered = 0;
        double rtt_sum = 0.0;
        double rtt_max = 0.0;
        for (int j = 0; j < grid.n_lon; ++j) {
            const double ux = cl * grid.cos_lon[j];
            const double uy = cl * grid.sin_lon[j];
            const double uz = sl;
            double best_slant = -1.0;
            for (int k = 0; k < n_sats; ++k) {
                const double cos_gamma = ux * sx[k] + uy * sy[k] + uz * sz[k];
                if (cos_gamma < sat_geometry[k].cos_half_angle) continue;
                const double a = sat_geometry[k].orbit_radius_km;
                const double d =
                    std::sqrt(body_r2 + a * a - 2.0 * body.radius_km * a * cos_gamma);
                if (best_slant < 0.0 || d < best_slant) best_slant = d;
            }
            if (best_slant >= 0.0) {
                const double rtt = rtt_ms(best_slant) + processing_delay_ms;
                ++covered;
                rtt_sum += rtt;
                if (rtt > rtt_max) rtt_max = rtt;
            }
        }
        band_covered[i] = covered;
        band_rtt_sum[i] = rtt_sum;
        band_rtt_max[i] = rtt_max;
    }
}

CoverageReport run_report(const BodyParameters& body, const Constellation& constellation,
                          const CoverageOptions& options, bool parallel) {
    body.validate();
    CoverageOptions opt = options;
    if (!(opt.grid_deg > 0.0 && opt.grid_deg <= 30.0))
        throw std::invalid_argument("coverage grid_deg must lie in (0, 30]");
    if (!(opt.dt_s > 0.0)) throw std::invalid_argument("coverage dt_s must be > 0");
    if (opt.t1_s < 0.0) {
        opt.t1_s = opt.t0_s + (constellation.size() > 0
                                   ? orbital_period_s(body, constellation.orbits.front())
                                   : body.rotation_period_s);
    }
    if (!(opt.t1_s >= opt.t0_s)) throw std::invalid_argument("coverage window needs t1 >= t0");

    const GridSpec grid = make_grid(opt.grid_deg);
    const int n_steps =
        static_cast<int>(std::floor((opt.t1_s - opt.t0_s) / opt.dt_s + 1e-9)) + 1;

    std::vector<SatGeometry> sat_geometry;
    sat_geometry.reserve(constellation.orbits.size());
    for (const auto& orbit : constellation.orbits) {
        const double alpha =
            coverage_half_angle_deg(body.radius_km, orbit.altitude_km, opt.min_elevation_deg);
        sat_geometry.push_back(
            {body.radius_km + orbit.altitude_km, std::cos(alpha * DEG2RAD)});
    }

    // Step-major slabs; each step writes only its own slots.
    const size_t slots = static_cast<size_t>(n_steps) * grid.n_lat;
    std::vector<std::int64_t> covered(slots, 0);
    std::vector<double> rtt_sum(slots, 0.0);
    std::vector<double> rtt_max(slots, 0.0);

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int s = 0; s < n_steps; ++s) {
            const size_t base = static_cast<size_t>(s) * grid.n_lat;
            coverage_step(body, constellation, sat_geometry, grid, opt.t0_s + s * opt.dt_s,
                          opt.processing_delay_ms, &covered[base], &rtt_sum[base],
                          &rtt_max[base]);
        }
    } else {
        for (int s = 0; s < n_steps; ++s) {
            const size_t base = static_cast<size_t>(s) * grid.n_lat;
            coverage_step(body, constellation, sat_geometry, grid, opt.t0_s + s * opt.dt_s,
                          opt.processing_delay_ms, &covered[base], &rtt_sum[base],
                          &rtt_max[base]);
        }
    }

    // Merge per-step partials in step order (fixed summation tree), then the
    // bands in latitude order; both reductions are schedule-independent.
    CoverageReport report;
    report.options = opt;
    report.grid_lat_count = grid.n_lat;
    report.grid_lon_count = grid.n_lon;
    report.step_count = n_steps;

    const std::int64_t samples_per_band = static_cast<std::int64_t>(grid.n_lon) * n_steps;
    double weighted_total = 0.0;
    double weighted_covered = 0.0;
    double weighted_rtt_sum = 0.0;

    for (int i = 0; i < grid.n_lat; ++i) {
        std::int64_t band_count = 0;
        double band_sum = 0.0;
        double band_max = 0.0;
        for (int s = 0; s < n_steps; ++s) {
            const size_t idx = static_cast<size_t>(s) * grid.n_lat + i;
            band_count += covered[idx];
            band_sum += rtt_sum[idx];
            band_max = std::max(band_max, rtt_max[idx]);
        }
        LatitudeBandStats band;
        band.lat_deg = grid.lat_deg[i];
        band.covered_fraction =
            samples_per_band > 0 ? static_cast<double>(band_count) / samples_per_band : 0.0;
        band.max_rtt_ms = band_max;
        band.mean_rtt_ms = band_count > 0 ? band_sum / band_count : 0.0;
        report.bands.push_back(band);

        const double w = grid.cos_lat[i];
        weighted_total += w * static_cast<double>(samples_per_band);
        weighted_covered += w * static_cast<double>(band_count);
        weighted_rtt_sum += w * band_sum;
        report.max_rtt_ms = std::max(report.max_rtt_ms, band_max);
    }

    report.covered_fraction = weighted_total > 0.0 ? weighted_covered / weighted_total : 0.0;
    report.mean_rtt_ms = weighted_covered > 0.0 ? weighted_rtt_sum / weighted_covered : 0.0;
    return report;
}

}  // namespace

CoverageReport coverage_report(const BodyParameters& body, const Constellation& constellation,
                               const CoverageOptions& options) {
    return run_report(body, constellation, options, true);
}

CoverageReport coverage_report_serial(const BodyParameters& body,
                                      const Constellation& constellation,
                                      const CoverageOptions& options) {
    return run_report(body, constellation, options, false);
}

void write_coverage_csv(std::ostream& out, const CoverageReport& report,
                        const std::vector<std::string>& comments) {
    for (const auto& line : comments) out << "# " << line << "\n";
    out << "lat_band_deg,covered_fraction,max_rtt_ms,mean_rtt_ms\n";
    for (const auto& band : report.bands) {
        out << fmt_sig(band.lat_deg) << ',' << fmt_sig(band.covered_fraction) << ','
            << fmt_sig(band.max_rtt_ms) << ',' << fmt_sig(band.mean_rtt_ms) << "\n";
    }
    out << "ALL," << fmt_sig(report.covered_fraction) << ',' << fmt_sig(report.max_rtt_ms)
        << ',' << fmt_sig(report.mean_rtt_ms) << "\n";
}

}  // namespace marsnet
