#pragma once

#include "discpot/geometry.hpp"
#include "discpot/quadrature.hpp"

namespace discpot {

inline constexpr double kMinOracleTol = 1e-13;

// (1/8pi) * integral of s^2 (log s^2 - 1) over the intervals of angular_region(q).
QuadResult quad_F(const OverlapQuery& q, double tol);
// The same integrand with the intervals weighted by the orientation they carry
// inside the lune. Reference for F_region.
QuadResult quad_F_region(const OverlapQuery& q, double tol);
// E as the analytic sector term plus 2 * quad_F_region.
QuadResult quad_E(const OverlapQuery& q, double tol);
// E by nested quadrature of r log r / (2 pi) over the lune in polar
// coordinates. The radial limits come straight from |y| <= eps, |y - x| <= 1.
QuadResult quad_E_polar2d(const OverlapQuery& q, double tol);

// -integral over [0, phi] of (1 - a cos u)(log|1 - a e^{iu}|^2 - 1)
QuadResult quad_h2(double a, double phi, double tol);
// (1 / 2pi) * integral over [r0, r1] of arccos(l(a; r)) r log r
QuadResult quad_h1_increment(double a, double r0, double r1, double tol);

}  // namespace discpot
