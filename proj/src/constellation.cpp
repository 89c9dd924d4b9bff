#include "marsnet/constellation.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace marsnet {

void WalkerConfig::validate() const {
    if (planes < 1) throw std::invalid_argument("walker planes must be >= 1");
    if (sats_per_plane < 1) throw std::invalid_argument("walker sats_per_plane must be >= 1");
    if (!(altitude_km > 0.0)) throw std::invalid_argument("walker altitude_km must be > 0");
    if (!(inclination_deg >= 0.0 && inclination_deg <= 180.0))
        throw std::invalid_argument("walker inclination_deg must lie in [0, 180]");
    if (!(raan_spread_deg > 0.0 && raan_spread_deg <= 360.0))
        throw std::invalid_argument("walker raan_spread_deg must lie in (0, 360]");
}

Constellation generate_walker(const WalkerConfig& config) {
    config.validate();
    Constellation c;
    c.config = config;
    c.orbits.reserve(static_cast<size_t>(config.planes) * config.sats_per_plane);
    for (int p = 0; p < config.planes; ++p) {
        const double raan = p * config.raan_spread_deg / config.planes;
        for (int s = 0; s < config.sats_per_plane; ++s) {
            const double phase = s * 360.0 / config.sats_per_plane + p * config.phasing_offset_deg;
            c.orbits.emplace_back(config.altitude_km, config.inclination_deg, raan, phase);
        }
    }
    return c;
}

namespace {

constexpr const char* kCatalogHeader = "name,lat_deg,lon_deg,min_elevation_deg";

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

bool is_blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

double parse_double_field(const std::string& field, int line_no, const char* what) {
    double value{};
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        std::ostringstream msg;
        msg << "ground-station catalog line " << line_no << ": bad " << what << " '" << field
            << "'";
        throw std::runtime_error(msg.str());
    }
    return value;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

std::vector<GroundStation> load_ground_stations(std::istream& in) {
    std::vector<GroundStation> stations;
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (is_blank_or_comment(line)) continue;

        if (!header_seen) {
            if (line != kCatalogHeader) {
                std::ostringstream msg;
                msg << "ground-station catalog line " << line_no << ": expected header '"
                    << kCatalogHeader << "'";
                throw std::runtime_error(msg.str());
            }
            header_seen = true;
            continue;
        }

        const auto fields = split_csv(line);
        if (fields.size() < 3 || fields.size() > 4 || fields[0].empty()) {
            std::ostringstream msg;
            msg << "ground-station catalog line " << line_no << ": malformed row '" << line
                << "'";
            throw std::runtime_error(msg.str());
        }

        GroundStation st;
        st.name = fields[0];
        st.lat_deg = parse_double_field(fields[1], line_no, "lat_deg");
        st.lon_deg = parse_double_field(fields[2], line_no, "lon_deg");
        if (fields.size() == 4 && !fields[3].empty())
            st.min_elevation_deg = parse_double_field(fields[3], line_no, "min_elevation_deg");

        if (!(st.lat_deg >= -90.0 && st.lat_deg <= 90.0)) {
            std::ostringstream msg;
            msg << "ground-station catalog line " << line_no << ": lat_deg " << st.lat_deg
                << " outside [-90, 90]";
            throw std::runtime_error(msg.str());
        }
        if (!(st.lon_deg >= -180.0 && st.lon_deg < 180.0)) {
            std::ostringstream msg;
            msg << "ground-station catalog line " << line_no << ": lon_deg " << st.lon_deg
                << " outside [-180, 180)";
            throw std::runtime_error(msg.str());
        }
        if (!(st.min_elevation_deg >= 0.0 && st.min_elevation_deg < 90.0)) {
            std::ostringstream msg;
            msg << "ground-station catalog line " << line_no << ": min_elevation_deg "
                << st.min_elevation_deg << " outside [0, 90)";
            throw std::runtime_error(msg.str());
        }
        if (!seen.insert(st.name).second) {
            std::ostringstream msg;
            msg << "ground-station catalog line " << line_no << ": duplicate station name '"
                << st.name << "'";
            throw std::runtime_error(msg.str());
        }
        stations.push_back(std::move(st));
    }

    if (!header_seen) throw std::runtime_error("ground-station catalog: missing header");
    return stations;
}

std::vector<GroundStation> load_ground_stations_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ground-station catalog: " + path);
    return load_ground_stations(in);
}

const std::vector<GroundStation>& default_ground_stations() {
    // Landing sites of well-known Mars surface missions. Illustrative;
    // scenarios can substitute any catalog file.
    static const std::vector<GroundStation> catalog = {
        {"viking1", 22.27, -47.95, 25.0},      {"viking2", 47.64, 134.29, 25.0},
        {"pathfinder", 19.13, -33.22, 25.0},   {"spirit", -14.57, 175.47, 25.0},
        {"opportunity", -1.95, -5.53, 25.0},   {"phoenix", 68.22, -125.75, 25.0},
        {"curiosity", -4.59, 137.44, 25.0},    {"insight", 4.50, 135.62, 25.0},
        {"perseverance", 18.44, 77.45, 25.0},
    };
    return catalog;
}

}  // namespace marsnet
