#include "coex/propagation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace coex {
namespace {

void require_non_negative(double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be a finite value >= 0");
    }
}

}  // namespace

void PropagationConfig::validate() const {
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz)) {
        throw std::invalid_argument("frequency_hz must be > 0");
    }
    require_non_negative(zenith_gas_att_db, "zenith_gas_att_db");
    require_non_negative(rain_cloud_att_db, "rain_cloud_att_db");
    require_non_negative(scintillation_att_db, "scintillation_att_db");
    require_non_negative(shadow_sigma_db, "shadow_sigma_db");
    if (entry_loss_db != 0.0) {
        throw std::invalid_argument("entry_loss_db must be 0 (outdoor UEs only)");
    }
    if (!(min_elevation_deg > 0.0) || !(min_elevation_deg < 90.0)) {
        throw std::invalid_argument("min_elevation_deg must lie in (0, 90)");
    }
}

double fspl_db(double distance_km, double frequency_hz) {
    if (!(distance_km > 0.0) || !std::isfinite(distance_km)) {
        throw std::domain_error("fspl: distance must be > 0");
    }
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz)) {
        throw std::domain_error("fspl: frequency must be > 0");
    }
    return 32.45 + 20.0 * std::log10(frequency_hz / 1e9) + 20.0 * std::log10(distance_km * 1e3);
}

double gas_attenuation_db(Angle elevation_ue, const PropagationConfig& config) {
    const double e = elevation_ue.degrees();
    if (!(e >= config.min_elevation_deg)) {
        throw std::domain_error("UE elevation " + std::to_string(e) + " deg below the " +
                                std::to_string(config.min_elevation_deg) + " deg guard");
    }
    return config.zenith_gas_att_db / std::sin(elevation_ue.radians());
}

PathLossBreakdown path_loss(double d_u_km, Angle elevation_ue, const PropagationConfig& config) {
    PathLossBreakdown pl;
    pl.fspl_db = fspl_db(d_u_km, config.frequency_hz);
    pl.gas_db = gas_attenuation_db(elevation_ue, config);
    pl.rain_cloud_db = config.rain_cloud_att_db;
    pl.scintillation_db = config.scintillation_att_db;
    pl.entry_db = 0.0;
    pl.total_db = pl.fspl_db + pl.gas_db + pl.rain_cloud_db + pl.scintillation_db + pl.entry_db;
    return pl;
}

PathLossBreakdown path_loss(double d_u_km, Angle elevation_ue, const PropagationConfig& config,
                            std::mt19937_64& rng) {
    PathLossBreakdown pl = path_loss(d_u_km, elevation_ue, config);
    if (config.shadow_sigma_db > 0.0) {
        std::normal_distribution<double> shadow(0.0, config.shadow_sigma_db);
        pl.shadow_db = shadow(rng);
        pl.total_db += pl.shadow_db;
    }
    return pl;
}

}  // namespace coex
