#pragma once

#include "coex/angle.hpp"

namespace coex {

// Spherical Earth with a satellite on a circular orbit. Lengths in km.
struct EarthModel {
    double earth_radius_km = 6378.0;
    double altitude_km = 600.0;

    // Throws std::invalid_argument if either length is not strictly positive.
    void validate() const;

    double orbit_radius_km() const { return earth_radius_km + altitude_km; }
    // Slant range to a ground point with the satellite on the horizon (0 deg elevation).
    double horizon_slant_km() const;
};

// Satellite -> beam-center geometry for one slant range.
struct BeamGeometry {
    double slant_km = 0.0;
    Angle elevation;      // satellite elevation seen from the beam center B
    Angle central_angle;  // Earth-center angle between sub-satellite point S and B
};

// Satellite / beam center / UE geometry for one (slant, alpha) point.
struct CoexGeometry {
    Angle alpha;  // bearing at B from the direction toward S, folded into [0, 180] deg
    double separation_km = 0.0;  // great-circle distance B -> UE
    Angle theta;                 // misalignment between boresight (-> B) and -> UE
    double d_u_km = 0.0;         // satellite -> UE distance
    Angle elevation_ue;          // satellite elevation seen from the UE
    Angle central_angle_su;      // Earth-center angle between S and UE
};

// d = sqrt((Re+h)^2 - Re^2 cos^2 e) - Re sin e. Elevation must lie in (0, 90] deg.
double slant_from_elevation(Angle elevation, const EarthModel& earth);

// Inverse of slant_from_elevation. Slant must lie in [h, horizon slant].
Angle elevation_from_slant(double slant_km, const EarthModel& earth);

// Earth-center angle between S and the ground point at the given slant range.
Angle central_angle_from_slant(double slant_km, const EarthModel& earth);

// Satellite distance to a ground point at the given Earth-center angle from S
// (law of cosines in the center/ground/satellite triangle).
double slant_from_central_angle(Angle central_angle, const EarthModel& earth);

// Spherical law of cosines: Earth-center angle between S and a point that lies
// `separation` away from B along bearing `alpha` (measured from the direction
// toward S), where B is `central_angle_b` away from S.
Angle spherical_offset(Angle central_angle_b, Angle separation, Angle alpha);

// Maps any alpha onto the equivalent bearing in [0, 180] deg (mirror symmetry
// about the S-B great circle).
Angle fold_alpha(Angle alpha);

BeamGeometry make_beam_geometry(double slant_km, const EarthModel& earth);

// Builds satellite, B and UE positions in 3-D (Earth center at the origin,
// satellite on +z, B in the x-z plane) and derives theta, d_u and the UE
// elevation from them.
CoexGeometry build_coex_geometry(const BeamGeometry& beam, double separation_km, Angle alpha,
                                 const EarthModel& earth);

}  // namespace coex
