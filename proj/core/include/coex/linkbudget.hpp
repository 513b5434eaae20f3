#pragma once

#include "coex/angle.hpp"
#include "coex/antenna.hpp"
#include "coex/propagation.hpp"

namespace coex {

inline constexpr double kBoltzmann = 1.380649e-23;  // J/K

// Satellite transmit side, per PRB.
struct TxConfig {
    double eirp_peak_dbw_per_prb = 19.24;
    double channel_gain_db = -0.4;  // good-state small-scale fading gain
    double ue_rx_gain_dbi = 0.0;    // omnidirectional UE

    void validate() const;
};

// Thermal noise floor of the TN UE over one PRB.
struct NoiseModel {
    double prb_bandwidth_hz = 180e3;
    double noise_figure_db = 7.0;
    double reference_temp_k = 290.0;

    void validate() const;
};

struct SinrResult {
    double rx_interference_dbw = 0.0;
    double noise_dbw = 0.0;
    double inr_db = 0.0;
    double snr_db = 0.0;
    double sinr_db = 0.0;
    double degradation_db = 0.0;  // snr - sinr = 10 log10(1 + I/N)
};

// Peak EIRP plus the normalised pattern gain toward theta.
double tx_eirp_toward(Angle theta, const TxConfig& tx, const AntennaPattern& pattern);

// EIRP + G(theta) - PL + g + G_rx. Path loss is a positive attenuation and is subtracted.
double rx_power_dbw(Angle theta, const PathLossBreakdown& pl, const TxConfig& tx, const AntennaPattern& pattern);

// 10 log10(k T B) + NF.
double noise_power_dbw(const NoiseModel& noise);

// Folds interference into the noise floor of a link with the given SNR.
// rx_interference_dbw may be -inf (no interference).
SinrResult sinr_db(double snr_db, double rx_interference_dbw, double noise_dbw);

}  // namespace coex
