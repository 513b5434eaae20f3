#pragma once

#include <cmath>
#include <numbers>

namespace coex {

// Plane angle stored in radians. Construct through the named factories so
// degree/radian mix-ups are caught at the call site.
class Angle {
public:
    constexpr Angle() = default;

    static constexpr Angle from_radians(double rad) { return Angle(rad); }
    static constexpr Angle from_degrees(double deg) { return Angle(deg * std::numbers::pi / 180.0); }

    constexpr double radians() const { return rad_; }
    constexpr double degrees() const { return rad_ * 180.0 / std::numbers::pi; }

    friend constexpr Angle operator-(Angle a) { return Angle(-a.rad_); }
    friend constexpr auto operator<=>(Angle, Angle) = default;

private:
    explicit constexpr Angle(double rad) : rad_(rad) {}
    double rad_ = 0.0;
};

inline namespace literals {

inline Angle operator""_deg(long double v) { return Angle::from_degrees(static_cast<double>(v)); }
inline Angle operator""_deg(unsigned long long v) { return Angle::from_degrees(static_cast<double>(v)); }

}  // namespace literals

}  // namespace coex
