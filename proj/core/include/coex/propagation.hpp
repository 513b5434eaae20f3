#pragma once

#include <random>

#include "coex/angle.hpp"

namespace coex {

// Satellite-to-ground path loss terms. Attenuations in dB.
struct PropagationConfig {
    double frequency_hz = 2.17e9;
    double zenith_gas_att_db = 0.035;
    double rain_cloud_att_db = 0.0;
    double scintillation_att_db = 0.0;
    double entry_loss_db = 0.0;   // outdoor UEs only; must stay 0
    double shadow_sigma_db = 0.0;  // 0 = deterministic median
    double min_elevation_deg = 5.0;

    void validate() const;
};

struct PathLossBreakdown {
    double fspl_db = 0.0;
    double gas_db = 0.0;
    double rain_cloud_db = 0.0;
    double scintillation_db = 0.0;
    double entry_db = 0.0;
    double shadow_db = 0.0;  // zero-mean log-normal sample, 0 in deterministic mode
    double total_db = 0.0;
};

// 32.45 + 20 log10(f / GHz) + 20 log10(d / m).
double fspl_db(double distance_km, double frequency_hz);

// Zenith gas attenuation scaled by 1 / sin(elevation). Elevations below
// config.min_elevation_deg are rejected.
double gas_attenuation_db(Angle elevation_ue, const PropagationConfig& config);

// Deterministic breakdown; shadow_db is always 0.
PathLossBreakdown path_loss(double d_u_km, Angle elevation_ue, const PropagationConfig& config);

// As above, plus a N(0, shadow_sigma_db) shadowing draw from `rng` when the
// configured sigma is positive. The generator is never touched otherwise.
PathLossBreakdown path_loss(double d_u_km, Angle elevation_ue, const PropagationConfig& config,
                            std::mt19937_64& rng);

}  // namespace coex
