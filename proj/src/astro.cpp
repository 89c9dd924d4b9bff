#include "marsnet/astro.hpp"

#include <algorithm>

namespace marsnet {

void BodyParameters::validate() const {
    if (!(radius_km > 0.0)) throw std::invalid_argument("body radius_km must be > 0");
    if (!(gm_km3_s2 > 0.0)) throw std::invalid_argument("body gm_km3_s2 must be > 0");
    if (!(rotation_period_s > 0.0))
        throw std::invalid_argument("body rotation_period_s must be > 0");
}

double normalize_angle_deg(double angle_deg) {
    double a = std::fmod(angle_deg, 360.0);
    if (a < 0.0) a += 360.0;
    if (a == 360.0) a = 0.0;  // fmod can round up for tiny negatives
    return a;
}

double wrap_longitude_deg(double lon_deg) {
    double l = std::fmod(lon_deg + 180.0, 360.0);
    if (l < 0.0) l += 360.0;
    return l - 180.0;
}

CircularOrbit::CircularOrbit(double altitude, double inclination, double raan, double phase)
    : altitude_km(altitude),
      inclination_deg(inclination),
      raan_deg(normalize_angle_deg(raan)),
      phase_deg(normalize_angle_deg(phase)) {
    if (!(altitude_km > 0.0)) throw std::invalid_argument("orbit altitude_km must be > 0");
    if (!(inclination_deg >= 0.0 && inclination_deg <= 180.0))
        throw std::invalid_argument("orbit inclination_deg must lie in [0, 180]");
}

double synchronous_altitude_km(const BodyParameters& body) {
    const double t = body.rotation_period_s;
    const double a = std::cbrt(body.gm_km3_s2 * t * t / (4.0 * PI * PI));
    return a - body.radius_km;
}

double orbital_period_s(const BodyParameters& body, const CircularOrbit& orbit) {
    const double a = body.radius_km + orbit.altitude_km;
    return 2.0 * PI * std::sqrt(a * a * a / body.gm_km3_s2);
}

Vec3 propagate(const BodyParameters& body, const CircularOrbit& orbit, double t_s) {
    const double a = body.radius_km + orbit.altitude_km;
    const double period = orbital_period_s(body, orbit);
    const double theta = normalize_angle_deg(orbit.phase_deg + 360.0 * (t_s / period)) * DEG2RAD;
    const double inc = orbit.inclination_deg * DEG2RAD;
    const double raan = orbit.raan_deg * DEG2RAD;

    // In-plane position, then Rx(inclination), then Rz(raan).
    const double xo = a * std::cos(theta);
    const double yo = a * std::sin(theta);
    const double yi = yo * std::cos(inc);
    const double zi = yo * std::sin(inc);
    return {xo * std::cos(raan) - yi * std::sin(raan),
            xo * std::sin(raan) + yi * std::cos(raan), zi};
}

namespace {

Vec3 rotate_z(const Vec3& p, double angle_rad) {
    const double c = std::cos(angle_rad);
    const double s = std::sin(angle_rad);
    return {p.x * c - p.y * s, p.x * s + p.y * c, p.z};
}

}  // namespace

Vec3 body_fixed_from_inertial(const BodyParameters& body, const Vec3& p, double t_s) {
    const double turn = normalize_angle_deg(360.0 * (t_s / body.rotation_period_s));
    return rotate_z(p, -turn * DEG2RAD);
}

Vec3 inertial_from_body_fixed(const BodyParameters& body, const Vec3& p, double t_s) {
    const double turn = normalize_angle_deg(360.0 * (t_s / body.rotation_period_s));
    return rotate_z(p, turn * DEG2RAD);
}

LatLon latlon_from_body_fixed(const BodyParameters&, const Vec3& p) {
    const double r = norm(p);
    if (!(r > 0.0)) throw std::invalid_argument("cannot take lat/lon of the zero vector");
    const double lat = std::asin(std::clamp(p.z / r, -1.0, 1.0)) * RAD2DEG;
    // Longitude is undefined at the poles; return 0 by convention.
    if (p.x == 0.0 && p.y == 0.0) return {lat, 0.0};
    double lon = std::atan2(p.y, p.x) * RAD2DEG;
    return {lat, wrap_longitude_deg(lon)};
}

Vec3 ground_point_position(const BodyParameters& body, double lat_deg, double lon_deg,
                           double t_s) {
    if (!(lat_deg >= -90.0 && lat_deg <= 90.0))
        throw std::invalid_argument("latitude must lie in [-90, 90]");
    const double lat = lat_deg * DEG2RAD;
    const double lon = lon_deg * DEG2RAD;
    const Vec3 fixed{body.radius_km * std::cos(lat) * std::cos(lon),
                     body.radius_km * std::cos(lat) * std::sin(lon),
                     body.radius_km * std::sin(lat)};
    return inertial_from_body_fixed(body, fixed, t_s);
}

}  // namespace marsnet
