// Physical constants, circular two-body propagation, and coordinate frames
// (body-centered inertial and body-fixed rotating).

#pragma once

#include <cmath>
#include <stdexcept>

namespace marsnet {

inline constexpr double PI = 3.14159265358979323846;
inline constexpr double DEG2RAD = PI / 180.0;
inline constexpr double RAD2DEG = 180.0 / PI;

// Vacuum light speed (km/s), used for all propagation delays.
inline constexpr double SPEED_OF_LIGHT_KM_S = 299792.458;

// Mars physical constants: mean radius, gravitational parameter GM, and
// sidereal rotation period (24.6229 h).
inline constexpr double MARS_RADIUS_KM = 3389.5;
inline constexpr double MARS_GM_KM3_S2 = 42828.37;
inline constexpr double MARS_ROTATION_PERIOD_S = 88642.44;

// Mean interval between global Mars dust storms, shipped for scenario
// annotation only (no temporal storm model).
inline constexpr double GLOBAL_DUST_STORM_INTERVAL_YEARS = 5.5;

/// Cartesian 3-vector, km unless noted otherwise.
struct Vec3 {
    double x{};
    double y{};
    double z{};
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator*(const Vec3& v, double s) { return s * v; }
inline Vec3 operator/(const Vec3& v, double s) { return {v.x / s, v.y / s, v.z / s}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Physical constants of the central body.
struct BodyParameters {
    double radius_km = MARS_RADIUS_KM;
    double gm_km3_s2 = MARS_GM_KM3_S2;
    double rotation_period_s = MARS_ROTATION_PERIOD_S;

    static BodyParameters mars() { return {}; }

    // Throws std::invalid_argument unless all fields are strictly positive.
    void validate() const;
};

// Normalizes an angle into [0, 360).
double normalize_angle_deg(double angle_deg);

// Wraps a longitude into [-180, 180).
double wrap_longitude_deg(double lon_deg);

/// One satellite's circular orbit. Angles are normalized to [0, 360) at
/// construction; inclination must lie in [0, 180].
struct CircularOrbit {
    double altitude_km;
    double inclination_deg;
    double raan_deg;   // longitude of ascending node, inertial frame
    double phase_deg;  // angular position along the orbit at epoch t=0

    CircularOrbit(double altitude, double inclination, double raan, double phase);
};

/// Surface coordinates, degrees.
struct LatLon {
    double lat_deg{};
    double lon_deg{};
};

// Altitude of the circular orbit whose period matches the body's rotation
// (areostationary for Mars, geostationary for Earth):
// (gm*T^2 / 4 pi^2)^(1/3) - radius.
double synchronous_altitude_km(const BodyParameters& body);

// 2 pi sqrt(a^3/gm) with a = radius + altitude.
double orbital_period_s(const BodyParameters& body, const CircularOrbit& orbit);

// Satellite position in the body-centered inertial frame at time t:
// Rz(raan) * Rx(inclination) * (a cos th, a sin th, 0),
// th = phase + 360 t / period.
Vec3 propagate(const BodyParameters& body, const CircularOrbit& orbit, double t_s);

// Inertial and body-fixed frames coincide at t=0; the body rotates about
// the +z polar axis at 360/rotation_period_s deg/s.
Vec3 body_fixed_from_inertial(const BodyParameters& body, const Vec3& p, double t_s);
Vec3 inertial_from_body_fixed(const BodyParameters& body, const Vec3& p, double t_s);

// Spherical conversion on a sphere of radius |p|. Longitude at the poles is
// undefined and returned as 0.
LatLon latlon_from_body_fixed(const BodyParameters& body, const Vec3& p);

// Inertial position at time t of a surface point that rotates with the body.
Vec3 ground_point_position(const BodyParameters& body, double lat_deg, double lon_deg,
                           double t_s);

}  // namespace marsnet
