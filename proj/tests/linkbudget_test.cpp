#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "coex/geometry.hpp"
#include "coex/linkbudget.hpp"

using namespace coex;

namespace {

const AntennaPattern kPattern{};
const TxConfig kTx{};
constexpr double kFirstZero = 3.8317059702075123;

}  // namespace

TEST_CASE("tx_eirp_toward") {
    CHECK(tx_eirp_toward(0_deg, kTx, kPattern) == 19.24);
    CHECK(tx_eirp_toward(9.451_deg, kTx, kPattern) == doctest::Approx(16.1).epsilon(0.01));
    const Angle null = Angle::from_radians(std::asin(kFirstZero / (kPattern.wave_number_per_m() * kPattern.aperture_radius_m)));
    CHECK(tx_eirp_toward(null, kTx, kPattern) == doctest::Approx(-80.76).epsilon(1e-12));
}

TEST_CASE("rx_power_dbw assembly") {
    TxConfig flat = kTx;
    flat.channel_gain_db = 0.0;
    CHECK(rx_power_dbw(0_deg, PathLossBreakdown{}, flat, kPattern) == 19.24);

    PathLossBreakdown pl;
    pl.total_db = 150.0;
    const double base = rx_power_dbw(5_deg, pl, kTx, kPattern);
    pl.total_db = 160.0;
    CHECK(rx_power_dbw(5_deg, pl, kTx, kPattern) == doctest::Approx(base - 10.0).epsilon(1e-14));

    TxConfig hot = kTx;
    hot.eirp_peak_dbw_per_prb += 3.0;
    pl.total_db = 150.0;
    CHECK(rx_power_dbw(5_deg, pl, hot, kPattern) == doctest::Approx(base + 3.0).epsilon(1e-14));
    hot.channel_gain_db -= 1.5;
    CHECK(rx_power_dbw(5_deg, pl, hot, kPattern) == doctest::Approx(base + 1.5).epsilon(1e-14));
}

TEST_CASE("rx_power_dbw: zenith beam chain") {
    const EarthModel earth;
    const CoexGeometry g = build_coex_geometry(make_beam_geometry(600.0, earth), 100.0, 0_deg, earth);
    CHECK(g.d_u_km == doctest::Approx(609.0).epsilon(1e-4));
    CHECK(g.elevation_ue.degrees() == doctest::Approx(79.7).epsilon(1e-3));
    const PathLossBreakdown pl = path_loss(g.d_u_km, g.elevation_ue, PropagationConfig{});
    // Composition of the geometry, pattern and path-loss oracles: -139.183998504 dBW.
    CHECK(rx_power_dbw(g.theta, pl, kTx, kPattern) == doctest::Approx(-139.183998503907).epsilon(1e-11));
}

TEST_CASE("noise_power_dbw") {
    NoiseModel n;
    n.noise_figure_db = 0.0;
    CHECK(noise_power_dbw(n) == doctest::Approx(-151.422462143195).epsilon(1e-12));
    CHECK(noise_power_dbw(NoiseModel{}) == doctest::Approx(-144.422462143195).epsilon(1e-12));
    NoiseModel wide;
    wide.prb_bandwidth_hz *= 2.0;
    CHECK(noise_power_dbw(wide) - noise_power_dbw(NoiseModel{}) == doctest::Approx(3.0103).epsilon(1e-4));
    CHECK_THROWS_AS((NoiseModel{0.0, 7.0, 290.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((NoiseModel{180e3, 7.0, 0.0}.validate()), std::invalid_argument);
}

TEST_CASE("sinr_db") {
    const double noise = -144.0;
    const SinrResult none = sinr_db(5.25, -std::numeric_limits<double>::infinity(), noise);
    CHECK(none.sinr_db == 5.25);
    CHECK(none.degradation_db == 0.0);

    const SinrResult equal = sinr_db(5.25, noise, noise);
    CHECK(equal.inr_db == 0.0);
    CHECK(equal.degradation_db == doctest::Approx(3.0103).epsilon(1e-5));

    const SinrResult ex = sinr_db(5.25, noise + 5.23, noise);
    CHECK(ex.inr_db == doctest::Approx(5.23).epsilon(1e-12));
    CHECK(ex.sinr_db == doctest::Approx(-1.119153734531).epsilon(1e-10));
    CHECK(ex.degradation_db == doctest::Approx(6.369153734531).epsilon(1e-10));
    CHECK(ex.sinr_db == doctest::Approx(-1.12).epsilon(0.01));
    CHECK(ex.degradation_db == doctest::Approx(6.37).epsilon(1e-3));
}

TEST_CASE("sinr_db properties") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> inr_d(-60.0, 40.0);
    std::uniform_real_distribution<double> snr_d(-10.0, 30.0);
    for (int i = 0; i < 500; ++i) {
        const double inr = inr_d(gen);
        const double snr = snr_d(gen);
        const SinrResult a = sinr_db(snr, -140.0 + inr, -140.0);
        const SinrResult b = sinr_db(snr + 7.0, -140.0 + inr, -140.0);
        const SinrResult c = sinr_db(snr, -140.0 + inr + 0.01, -140.0);
        CHECK(a.degradation_db > 0.0);
        CHECK(a.sinr_db < a.snr_db);
        CHECK(a.degradation_db == doctest::Approx(a.snr_db - a.sinr_db).epsilon(1e-12));
        CHECK(b.degradation_db == a.degradation_db);
        CHECK(c.degradation_db > a.degradation_db);
    }
}

TEST_CASE("TxConfig validation") {
    CHECK_NOTHROW(TxConfig{}.validate());
    TxConfig t;
    t.ue_rx_gain_dbi = 3.0;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
    t = {};
    t.eirp_peak_dbw_per_prb = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
}
