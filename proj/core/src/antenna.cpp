#include "coex/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "coex/bessel.hpp"

namespace coex {
namespace {

// Below this argument the pattern is evaluated from its Taylor expansion,
// 4 (J1(x)/x)^2 = 1 - x^2/4 + O(x^4).
constexpr double kSeriesCutoff = 1e-6;

}  // namespace

void AntennaPattern::validate() const {
    if (!(aperture_radius_m > 0.0) || !std::isfinite(aperture_radius_m)) {
        throw std::invalid_argument("aperture_radius_m must be > 0");
    }
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz)) {
        throw std::invalid_argument("frequency_hz must be > 0");
    }
}

double AntennaPattern::wave_number_per_m() const {
    return 2.0 * std::numbers::pi * frequency_hz / kSpeedOfLight;
}

double gain_linear(Angle theta, const AntennaPattern& pattern) {
    const double t = theta.radians();
    if (!std::isfinite(t) || std::abs(t) > std::numbers::pi / 2.0) {
        throw std::domain_error("antenna pattern undefined for |theta| > 90 deg (theta = " +
                                std::to_string(theta.degrees()) + " deg)");
    }
    if (t == 0.0) {
        return 1.0;
    }
    const double x = std::abs(pattern.wave_number_per_m() * pattern.aperture_radius_m * std::sin(t));
    if (x < kSeriesCutoff) {
        return 1.0 - x * x / 4.0;
    }
    const double r = bessel_j1(x) / x;
    return std::min(1.0, 4.0 * r * r);
}

double gain_db(Angle theta, const AntennaPattern& pattern) {
    const double g = gain_linear(theta, pattern);
    if (g <= 0.0) {
        return kGainFloorDb;
    }
    return std::max(kGainFloorDb, 10.0 * std::log10(g));
}

}  // namespace coex
