#include "coex/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace coex {
namespace {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
};

double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

// Angle between two vectors; atan2 keeps small angles accurate.
Angle angle_between(Vec3 a, Vec3 b) { return Angle::from_radians(std::atan2(norm(cross(a, b)), dot(a, b))); }

// Relative slack when accepting slant ranges at the ends of the valid interval.
constexpr double kSlantSlack = 1e-12;

void check_slant(double slant_km, const EarthModel& earth) {
    if (!std::isfinite(slant_km)) {
        throw std::domain_error("slant range must be finite");
    }
    if (slant_km < earth.altitude_km * (1.0 - kSlantSlack)) {
        throw std::domain_error("slant below altitude: " + std::to_string(slant_km) + " km < " +
                                std::to_string(earth.altitude_km) + " km");
    }
    if (slant_km > earth.horizon_slant_km() * (1.0 + kSlantSlack)) {
        throw std::domain_error("slant beyond horizon: " + std::to_string(slant_km) + " km > " +
                                std::to_string(earth.horizon_slant_km()) + " km");
    }
}

}  // namespace

void EarthModel::validate() const {
    if (!(earth_radius_km > 0.0) || !std::isfinite(earth_radius_km)) {
        throw std::invalid_argument("earth_radius_km must be > 0");
    }
    if (!(altitude_km > 0.0) || !std::isfinite(altitude_km)) {
        throw std::invalid_argument("altitude_km must be > 0");
    }
}

double EarthModel::horizon_slant_km() const {
    // (Re+h)^2 - Re^2 written as h(2Re+h).
    return std::sqrt(altitude_km * (2.0 * earth_radius_km + altitude_km));
}

double slant_from_elevation(Angle elevation, const EarthModel& earth) {
    const double e = elevation.radians();
    if (!std::isfinite(e) || e <= 0.0 || e > std::numbers::pi / 2.0) {
        throw std::domain_error("elevation must lie in (0, 90] deg, got " + std::to_string(elevation.degrees()));
    }
    const double re = earth.earth_radius_km;
    const double ro = earth.orbit_radius_km();
    const double c = std::cos(e);
    const double s = std::sin(e);
    return std::sqrt(ro * ro - re * re * c * c) - re * s;
}

Angle elevation_from_slant(double slant_km, const EarthModel& earth) {
    check_slant(slant_km, earth);
    const double re = earth.earth_radius_km;
    const double h = earth.altitude_km;
    // ((Re+h)^2 - Re^2 - d^2) / (2 Re d) with the first difference expanded.
    const double sin_e = (h * (2.0 * re + h) - slant_km * slant_km) / (2.0 * re * slant_km);
    return Angle::from_radians(std::asin(std::clamp(sin_e, -1.0, 1.0)));
}

Angle central_angle_from_slant(double slant_km, const EarthModel& earth) {
    check_slant(slant_km, earth);
    const double re = earth.earth_radius_km;
    const double ro = earth.orbit_radius_km();
    const double h = earth.altitude_km;
    // 1 - cos g = (d^2 - h^2) / (2 Re (Re+h)), i.e. sin^2(g/2) = (d^2 - h^2) / (4 Re (Re+h)).
    const double hav = std::max(0.0, (slant_km - h) * (slant_km + h) / (4.0 * re * ro));
    return Angle::from_radians(2.0 * std::asin(std::sqrt(std::min(hav, 1.0))));
}

double slant_from_central_angle(Angle central_angle, const EarthModel& earth) {
    const double re = earth.earth_radius_km;
    const double ro = earth.orbit_radius_km();
    const double h = earth.altitude_km;
    const double s = std::sin(central_angle.radians() / 2.0);
    return std::sqrt(h * h + 4.0 * re * ro * s * s);
}

Angle spherical_offset(Angle central_angle_b, Angle separation, Angle alpha) {
    // Haversine form of cos g_su = cos g_b cos d + sin g_b sin d cos a.
    const double gb = central_angle_b.radians();
    const double d = separation.radians();
    const double half_diff = std::sin((gb - d) / 2.0);
    const double half_alpha = std::sin(alpha.radians() / 2.0);
    const double hav = half_diff * half_diff + std::sin(gb) * std::sin(d) * half_alpha * half_alpha;
    return Angle::from_radians(2.0 * std::asin(std::sqrt(std::clamp(hav, 0.0, 1.0))));
}

Angle fold_alpha(Angle alpha) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(alpha.radians(), two_pi);
    if (a < 0.0) {
        a += two_pi;
    }
    if (a > std::numbers::pi) {
        a = two_pi - a;
    }
    return Angle::from_radians(a);
}

BeamGeometry make_beam_geometry(double slant_km, const EarthModel& earth) {
    return {slant_km, elevation_from_slant(slant_km, earth), central_angle_from_slant(slant_km, earth)};
}

CoexGeometry build_coex_geometry(const BeamGeometry& beam, double separation_km, Angle alpha,
                                 const EarthModel& earth) {
    if (!(separation_km >= 0.0) || !std::isfinite(separation_km)) {
        throw std::domain_error("separation must be a finite distance >= 0 km");
    }
    const double re = earth.earth_radius_km;
    const double gb = beam.central_angle.radians();
    const double delta = separation_km / re;
    const Angle a = fold_alpha(alpha);

    const Vec3 sat{0.0, 0.0, earth.orbit_radius_km()};
    const Vec3 u_b{std::sin(gb), 0.0, std::cos(gb)};
    // Unit tangent at B pointing along the great circle toward S, and its normal.
    const Vec3 t{-std::cos(gb), 0.0, std::sin(gb)};
    const Vec3 p = cross(u_b, t);
    const Vec3 u_u = std::cos(delta) * u_b + std::sin(delta) * (std::cos(a.radians()) * t + std::sin(a.radians()) * p);

    const Vec3 to_b = re * u_b - sat;
    const Vec3 to_ue = re * u_u - sat;

    CoexGeometry g;
    g.alpha = a;
    g.separation_km = separation_km;
    g.theta = angle_between(to_b, to_ue);
    g.d_u_km = norm(to_ue);
    g.central_angle_su = Angle::from_radians(std::atan2(std::hypot(u_u.x, u_u.y), u_u.z));
    const double sin_eu = (earth.orbit_radius_km() * std::cos(g.central_angle_su.radians()) - re) / g.d_u_km;
    g.elevation_ue = Angle::from_radians(std::asin(std::clamp(sin_eu, -1.0, 1.0)));
    return g;
}

}  // namespace coex
