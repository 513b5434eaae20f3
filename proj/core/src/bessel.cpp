#include "coex/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coex {
namespace {

// Above this argument the Hankel expansion is accurate to well below 1e-16.
constexpr double kAsymptoticThreshold = 25.0;

// Miller's backward recurrence J_{n-1} = (2n/x) J_n - J_{n+1}, normalised with
// J_0 + 2 (J_2 + J_4 + ...) = 1. Requires 0 < x <= kAsymptoticThreshold.
double j1_backward_recurrence(double x) {
    constexpr double kBig = 1e250;
    constexpr double kSmall = 1e-250;

    const int start = 2 * ((static_cast<int>(x) + 60) / 2);
    double j_next = 0.0;  // J_{n+1}
    double j = 1.0;       // J_n, arbitrary scale
    double norm = 2.0 * j;
    double j1 = 0.0;
    for (int n = start; n > 0; --n) {
        const double j_prev = (2.0 * n / x) * j - j_next;
        j_next = j;
        j = j_prev;
        const int order = n - 1;
        if (order == 1) {
            j1 = j;
        } else if (order > 0 && order % 2 == 0) {
            norm += 2.0 * j;
        }
        if (std::abs(j) > kBig) {
            j *= kSmall;
            j_next *= kSmall;
            j1 *= kSmall;
            norm *= kSmall;
        }
    }
    norm += j;
    return j1 / norm;
}

// J_1(x) ~ sqrt(2/(pi x)) (P cos chi - Q sin chi), chi = x - 3 pi / 4.
double j1_hankel(double x) {
    constexpr double mu = 4.0;  // 4 nu^2
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double last = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (k * 8.0 * x);
        if (std::abs(term) > std::abs(last) || std::abs(term) < 1e-18) {
            break;
        }
        last = term;
        // term_k carries (-1)^floor(k/2): P takes even k, Q takes odd k.
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            p += sign * term;
        } else {
            q += sign * term;
        }
    }
    const double s = std::sin(x);
    const double c = std::cos(x);
    const double cos_chi = (s - c) / std::numbers::sqrt2;
    const double sin_chi = -(s + c) / std::numbers::sqrt2;
    return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace

double bessel_j1(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("bessel_j1: argument must be finite");
    }
    const double ax = std::abs(x);
    double r;
    if (ax < 1e-5) {
        r = 0.5 * ax * (1.0 - ax * ax / 8.0);
    } else if (ax <= kAsymptoticThreshold) {
        r = j1_backward_recurrence(ax);
    } else {
        r = j1_hankel(ax);
    }
    return x < 0.0 ? -r : r;
}

}  // namespace coex
