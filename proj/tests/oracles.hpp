#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's evaluation paths.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>

namespace coex::oracle {

// J1(x) = sum_k (-1)^k (x/2)^(2k+1) / (k! (k+1)!), summed in 50-digit binary
// floating point so the alternating series keeps full double accuracy out to
// |x| = 50 (largest term ~1e20). Stops once terms fall below 1e-40 after at
// least 40 terms.
inline double bessel_j1_series(double x) {
    using big = boost::multiprecision::cpp_bin_float_50;
    const big half = big(x) / 2;
    const big half_sq = half * half;
    big term = half;  // k = 0
    big sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= -half_sq / (big(k) * big(k + 1));
        sum += term;
        if (k >= 40 && abs(term) < big("1e-40")) {
            break;
        }
    }
    return static_cast<double>(sum);
}

// Slant range at elevation e by solving the triangle (Earth center, ground
// point, satellite) with the law of cosines, d^2 = Re^2 + (Re+h)^2 - 2 Re (Re+h) cos g,
// where the Earth-center angle g = 90 deg - e - asin(Re cos e / (Re+h)).
inline double slant_law_of_cosines(double elevation_deg, double re, double h) {
    const double e = elevation_deg * std::numbers::pi / 180.0;
    const double ro = re + h;
    const double nadir = std::asin(re * std::cos(e) / ro);
    const double g = std::numbers::pi / 2.0 - e - nadir;
    return std::sqrt(re * re + ro * ro - 2.0 * re * ro * std::cos(g));
}

// Earth-center angle for a slant range, plain law of cosines.
inline double central_angle_law_of_cosines(double slant, double re, double h) {
    const double ro = re + h;
    return std::acos((re * re + ro * ro - slant * slant) / (2.0 * re * ro));
}

// Off-nadir angle at the satellite toward a ground point at Earth-center angle g.
inline double nadir_angle(double g, double re, double h) {
    return std::atan2(re * std::sin(g), re + h - re * std::cos(g));
}

// For alpha = 0 or 180 deg the satellite, B and the UE share one plane; theta
// is the difference of the two off-nadir angles.
struct PlanarPoint {
    double theta_deg;
    double d_u_km;
    double elevation_ue_deg;
};

inline PlanarPoint planar_coex(double slant, double separation, bool toward_subsatellite, double re, double h) {
    const double gb = central_angle_law_of_cosines(slant, re, h);
    const double delta = separation / re;
    const double gu = toward_subsatellite ? gb - delta : gb + delta;
    const double ro = re + h;
    // Signed off-nadir angles; a UE past S (gu < 0) lies on the other side.
    const double theta = std::abs(nadir_angle(gb, re, h) - std::copysign(nadir_angle(std::abs(gu), re, h), gu));
    const double d = std::sqrt(re * re + ro * ro - 2.0 * re * ro * std::cos(gu));
    const double sin_eu = (ro * std::cos(gu) - re) / d;
    return {theta * 180.0 / std::numbers::pi, d, std::asin(sin_eu) * 180.0 / std::numbers::pi};
}

// theta from the triangle (satellite, B, UE): the sides are the slant range,
// d_u and the chord 2 Re sin(delta / 2).
inline double theta_from_triangle_deg(double slant, double d_u, double separation, double re) {
    const double chord = 2.0 * re * std::sin(separation / re / 2.0);
    const double c = (slant * slant + d_u * d_u - chord * chord) / (2.0 * slant * d_u);
    return std::acos(std::clamp(c, -1.0, 1.0)) * 180.0 / std::numbers::pi;
}

// Free-space loss from the Friis form, 20 log10(4 pi d f / c).
inline double fspl_friis_db(double distance_m, double frequency_hz) {
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * frequency_hz / 299'792'458.0);
}

}  // namespace coex::oracle
