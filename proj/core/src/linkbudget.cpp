#include "coex/linkbudget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace coex {
namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

}  // namespace

void TxConfig::validate() const {
    require_finite(eirp_peak_dbw_per_prb, "eirp_peak_dbw_per_prb");
    require_finite(channel_gain_db, "channel_gain_db");
    if (ue_rx_gain_dbi != 0.0) {
        throw std::invalid_argument("ue_rx_gain_dbi must be 0 (omnidirectional UE)");
    }
}

void NoiseModel::validate() const {
    if (!(prb_bandwidth_hz > 0.0) || !std::isfinite(prb_bandwidth_hz)) {
        throw std::invalid_argument("prb_bandwidth_hz must be > 0");
    }
    if (!(reference_temp_k > 0.0) || !std::isfinite(reference_temp_k)) {
        throw std::invalid_argument("reference_temp_k must be > 0");
    }
    require_finite(noise_figure_db, "noise_figure_db");
}

double tx_eirp_toward(Angle theta, const TxConfig& tx, const AntennaPattern& pattern) {
    return tx.eirp_peak_dbw_per_prb + gain_db(theta, pattern);
}

double rx_power_dbw(Angle theta, const PathLossBreakdown& pl, const TxConfig& tx, const AntennaPattern& pattern) {
    return tx_eirp_toward(theta, tx, pattern) - pl.total_db + tx.channel_gain_db + tx.ue_rx_gain_dbi;
}

double noise_power_dbw(const NoiseModel& noise) {
    return 10.0 * std::log10(kBoltzmann * noise.reference_temp_k * noise.prb_bandwidth_hz) + noise.noise_figure_db;
}

SinrResult sinr_db(double snr_db, double rx_interference_dbw, double noise_dbw) {
    SinrResult r;
    r.rx_interference_dbw = rx_interference_dbw;
    r.noise_dbw = noise_dbw;
    r.snr_db = snr_db;
    r.inr_db = rx_interference_dbw - noise_dbw;
    r.degradation_db = 10.0 * std::log1p(std::pow(10.0, r.inr_db / 10.0)) / std::numbers::ln10;
    r.sinr_db = snr_db - r.degradation_db;
    return r;
}

}  // namespace coex
