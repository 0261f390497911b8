#ifndef FLUXMODES_SPHERE_HPP
#define FLUXMODES_SPHERE_HPP

#include "fluxmodes/rational.hpp"

namespace fluxmodes {

// A point of the unit sphere; callers keep X^2 + Y^2 + Z^2 = 1 within 1e-12.
struct SpherePoint {
    double x;
    double y;
    double z;
};

// Squared-norm defect |X^2+Y^2+Z^2 - 1|, for validating SpherePoint inputs.
double unit_norm_defect(const SpherePoint& p);

// Stereographic projection from the north pole onto the equatorial plane:
// the south pole (0,0,-1) is the base point mapping to 0, the north pole
// (0,0,1) maps to infinity, and (1,0,0) stays at 1.
ExtendedPoint stereographic_project(const SpherePoint& p);

// Exact inverse of stereographic_project.
SpherePoint stereographic_unproject(const ExtendedPoint& p);

// Order of f at infinity in the w = 1/z chart: -(sum of multiplicities).
// Negative means a pole at infinity, positive a zero there. Agrees with
// the infinity coefficient of FactoredRational::divisor(). Throws
// std::domain_error for the zero function.
long long order_at_infinity(const FactoredRational& f);

} // namespace fluxmodes

#endif
