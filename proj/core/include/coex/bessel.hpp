#pragma once

namespace coex {

// Bessel function of the first kind, order one. Absolute error is below
// 1e-14 on [-50, 50]; throws std::domain_error for NaN or infinite input.
double bessel_j1(double x);

}  // namespace coex
