#include "coex/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace coex {

double fold_alpha_deg(double alpha_deg) {
    double a = std::fmod(alpha_deg, 360.0);
    if (a < 0.0) {
        a += 360.0;
    }
    return a > 180.0 ? 360.0 - a : a;
}

std::vector<std::string> alpha_fold_warnings(const ScenarioConfig& config) {
    std::vector<std::string> out;
    for (double a : config.alpha_list_deg) {
        const double folded = fold_alpha_deg(a);
        if (folded != a) {
            out.push_back("alpha " + std::to_string(a) + " deg folded to " + std::to_string(folded) +
                          " deg (mirror symmetry)");
        }
    }
    return out;
}

std::vector<double> slant_grid(const ScenarioConfig& config) {
    const int n = config.n_points;
    if (n < 2) {
        throw std::invalid_argument("n_points must be >= 2");
    }
    const double lo = config.slant_min_km;
    const double hi = config.slant_max_km;
    const double step = (hi - lo) / (n - 1);
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        grid[static_cast<std::size_t>(i)] = lo + i * step;
    }
    grid.back() = hi;
    return grid;
}

SweepRow evaluate_point(const ScenarioConfig& config, double alpha_deg, double slant_km, std::mt19937_64* rng) {
    const double alpha = fold_alpha_deg(alpha_deg);
    const BeamGeometry beam = make_beam_geometry(slant_km, config.earth);
    const CoexGeometry geo =
        build_coex_geometry(beam, config.separation_km, Angle::from_degrees(alpha), config.earth);

    const PathLossBreakdown pl = rng != nullptr
                                     ? path_loss(geo.d_u_km, geo.elevation_ue, config.propagation, *rng)
                                     : path_loss(geo.d_u_km, geo.elevation_ue, config.propagation);
    const double rx = rx_power_dbw(geo.theta, pl, config.tx, config.pattern);
    const SinrResult s = sinr_db(config.snr_db, rx, noise_power_dbw(config.noise));

    SweepRow row;
    row.alpha_deg = alpha;
    row.slant_km = slant_km;
    row.elevation_beam_deg = beam.elevation.degrees();
    row.theta_deg = geo.theta.degrees();
    row.d_u_km = geo.d_u_km;
    row.elevation_ue_deg = geo.elevation_ue.degrees();
    row.tx_eirp_dbw = tx_eirp_toward(geo.theta, config.tx, config.pattern);
    row.pl_fspl_db = pl.fspl_db;
    row.pl_gas_db = pl.gas_db;
    row.pl_scint_db = pl.scintillation_db;
    row.pl_total_db = pl.total_db;
    row.rx_power_dbw = rx;
    row.inr_db = s.inr_db;
    row.sinr_db = s.sinr_db;
    row.degradation_db = s.degradation_db;
    return row;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& config, unsigned threads) {
    config.validate();

    std::vector<double> alphas;
    alphas.reserve(config.alpha_list_deg.size());
    for (double a : config.alpha_list_deg) {
        alphas.push_back(fold_alpha_deg(a));
    }
    std::stable_sort(alphas.begin(), alphas.end());
    const std::vector<double> grid = slant_grid(config);

    const std::size_t n_slant = grid.size();
    std::vector<SweepRow> rows(alphas.size() * n_slant);
    const bool shadowing = config.propagation.shadow_sigma_db > 0.0;

    auto eval_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double alpha = alphas[i / n_slant];
            const double slant = grid[i % n_slant];
            if (shadowing) {
                std::seed_seq seq{static_cast<std::uint32_t>(config.shadow_seed),
                                  static_cast<std::uint32_t>(config.shadow_seed >> 32),
                                  static_cast<std::uint32_t>(i)};
                std::mt19937_64 rng(seq);
                rows[i] = evaluate_point(config, alpha, slant, &rng);
            } else {
                rows[i] = evaluate_point(config, alpha, slant);
            }
        }
    };

    const std::size_t n = rows.size();
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, n);
    if (workers == 1) {
        eval_range(0, n);
        return rows;
    }
    // jthread joins on destruction; an exception in any worker is rethrown here.
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(n, w * chunk);
            const std::size_t end = std::min(n, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                try {
                    eval_range(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return rows;
}

std::vector<PeakRecord> peak_summary(std::span<const SweepRow> rows) {
    if (rows.empty()) {
        throw std::invalid_argument("peak_summary: no rows");
    }
    std::vector<PeakRecord> peaks;
    for (const SweepRow& r : rows) {
        auto it = std::find_if(peaks.begin(), peaks.end(), [&](const PeakRecord& p) { return p.alpha_deg == r.alpha_deg; });
        if (it == peaks.end()) {
            peaks.push_back({r.alpha_deg, r.rx_power_dbw, r.slant_km});
        } else if (r.rx_power_dbw > it->peak_rx_power_dbw ||
                   (r.rx_power_dbw == it->peak_rx_power_dbw && r.slant_km < it->argmax_slant_km)) {
            it->peak_rx_power_dbw = r.rx_power_dbw;
            it->argmax_slant_km = r.slant_km;
        }
    }
    return peaks;
}

}  // namespace coex
