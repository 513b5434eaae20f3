#pragma once

#include <array>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coex/scenario.hpp"

namespace coex {

// One (alpha, slant) evaluation. Angles in degrees, lengths in km, powers in
// dBW, ratios in dB.
struct SweepRow {
    double alpha_deg = 0.0;
    double slant_km = 0.0;
    double elevation_beam_deg = 0.0;
    double theta_deg = 0.0;
    double d_u_km = 0.0;
    double elevation_ue_deg = 0.0;
    double tx_eirp_dbw = 0.0;
    double pl_fspl_db = 0.0;
    double pl_gas_db = 0.0;
    double pl_scint_db = 0.0;
    double pl_total_db = 0.0;
    double rx_power_dbw = 0.0;
    double inr_db = 0.0;
    double sinr_db = 0.0;
    double degradation_db = 0.0;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepField {
    std::string_view name;
    double SweepRow::*member;
};

// Column order used by the CSV writer and reader.
inline constexpr std::array<SweepField, 15> kSweepFields{{
    {"alpha_deg", &SweepRow::alpha_deg},
    {"slant_km", &SweepRow::slant_km},
    {"elevation_beam_deg", &SweepRow::elevation_beam_deg},
    {"theta_deg", &SweepRow::theta_deg},
    {"d_u_km", &SweepRow::d_u_km},
    {"elevation_ue_deg", &SweepRow::elevation_ue_deg},
    {"tx_eirp_dbw", &SweepRow::tx_eirp_dbw},
    {"pl_fspl_db", &SweepRow::pl_fspl_db},
    {"pl_gas_db", &SweepRow::pl_gas_db},
    {"pl_scint_db", &SweepRow::pl_scint_db},
    {"pl_total_db", &SweepRow::pl_total_db},
    {"rx_power_dbw", &SweepRow::rx_power_dbw},
    {"inr_db", &SweepRow::inr_db},
    {"sinr_db", &SweepRow::sinr_db},
    {"degradation_db", &SweepRow::degradation_db},
}};

struct PeakRecord {
    double alpha_deg = 0.0;
    double peak_rx_power_dbw = 0.0;
    double argmax_slant_km = 0.0;
};

// Maps alpha in [0, 360) onto [0, 180] by mirror symmetry.
double fold_alpha_deg(double alpha_deg);

// Human-readable notes for every configured alpha above 180 deg.
std::vector<std::string> alpha_fold_warnings(const ScenarioConfig& config);

// n_points uniformly spaced slant ranges, both endpoints included exactly.
std::vector<double> slant_grid(const ScenarioConfig& config);

// Evaluates the full chain geometry -> antenna -> path loss -> link budget at
// one point. `rng` is only consulted when shadowing is enabled.
SweepRow evaluate_point(const ScenarioConfig& config, double alpha_deg, double slant_km,
                        std::mt19937_64* rng = nullptr);

// |alpha_list| x n_points rows ordered by (folded alpha, slant). Rows are
// independent and may be evaluated on `threads` workers; the result does not
// depend on the thread count. With shadowing enabled, row i draws from a
// generator seeded with (shadow_seed, i).
std::vector<SweepRow> run_sweep(const ScenarioConfig& config, unsigned threads = 1);

// Peak rx power and its slant per alpha, in order of first appearance. Ties
// keep the smallest slant. Throws std::invalid_argument on empty input.
std::vector<PeakRecord> peak_summary(std::span<const SweepRow> rows);

}  // namespace coex
