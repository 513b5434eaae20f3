#pragma once

#include "coex/angle.hpp"

namespace coex {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

// Floor applied to the dB gain; pattern nulls are -inf in exact arithmetic.
inline constexpr double kGainFloorDb = -100.0;

// Ideal uniformly illuminated circular aperture.
struct AntennaPattern {
    double aperture_radius_m = 0.22;
    double frequency_hz = 2.17e9;
    // Metadata only. The link budget works with a peak EIRP and the normalised
    // pattern, so this value never enters a computation.
    double max_gain_dbi = 40.4;

    void validate() const;

    double wave_number_per_m() const;
};

// Normalised gain 4 |J1(ka sin t) / (ka sin t)|^2, equal to 1 at boresight.
// |theta| must not exceed 90 deg.
double gain_linear(Angle theta, const AntennaPattern& pattern);

// 10 log10(gain_linear), floored at kGainFloorDb.
double gain_db(Angle theta, const AntennaPattern& pattern);

}  // namespace coex
