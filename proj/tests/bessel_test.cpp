#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coex/bessel.hpp"
#include "oracles.hpp"

using coex::bessel_j1;

TEST_CASE("bessel_j1 spot values") {
    CHECK(bessel_j1(0.0) == 0.0);
    // Global maximum near x = 1.8412; value from the 50-digit series.
    CHECK(bessel_j1(1.8412) == doctest::Approx(0.581865224227643).epsilon(1e-12));
    CHECK(bessel_j1(1.8412) == doctest::Approx(0.5819).epsilon(1e-4));
    // First positive zero j_{1,1} = 3.8317059702075123.
    CHECK(std::abs(bessel_j1(3.8317059702075123)) < 1e-12);
    // The 6-digit rounding 3.83171 sits 4e-6 past the zero: series gives -1.623036e-6.
    CHECK(bessel_j1(3.83171) == doctest::Approx(-1.623036e-6).epsilon(1e-5));
    CHECK(bessel_j1(10.0) == doctest::Approx(0.043472746168861).epsilon(1e-12));
    CHECK(bessel_j1(50.0) == doctest::Approx(-0.097511828125175).epsilon(1e-12));
}

TEST_CASE("bessel_j1 matches the power-series oracle on [0, 50]") {
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double x = 50.0 * i / 1000.0;
        worst = std::max(worst, std::abs(bessel_j1(x) - coex::oracle::bessel_j1_series(x)));
    }
    CHECK(worst < 1e-7);
    // The implementation is far tighter than the contract.
    CHECK(worst < 1e-13);
}

TEST_CASE("bessel_j1 is odd and continuous across branch points") {
    for (double x : {1e-7, 1e-5, 0.3, 2.0, 7.5, 24.9, 25.0, 25.1, 40.0}) {
        CHECK(bessel_j1(-x) == -bessel_j1(x));
    }
    for (double edge : {1e-5, 25.0}) {
        const double lo = bessel_j1(std::nextafter(edge, 0.0));
        const double hi = bessel_j1(std::nextafter(edge, 100.0));
        CHECK(std::abs(hi - lo) < 1e-14);
    }
    // Beyond the tested range the asymptotic branch still agrees with the series.
    CHECK(bessel_j1(73.3) == doctest::Approx(coex::oracle::bessel_j1_series(73.3)).epsilon(1e-10));
}

TEST_CASE("bessel_j1 rejects non-finite input") {
    CHECK_THROWS_AS(bessel_j1(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(bessel_j1(std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_THROWS_AS(bessel_j1(-std::numeric_limits<double>::infinity()), std::domain_error);
}
