#pragma once

#include "discpot/dilog.hpp"
#include "discpot/geometry.hpp"

namespace discpot {

struct Flagged {
  double value = 0.0;
  bool accuracy_loss = false;
};

// G(a; phi) with integration constant 0. phi in [0, pi/2].
Flagged G_checked(double a, double phi);
double G(double a, double phi);
Flagged G_checked(const PathPoint& p);
double G(const PathPoint& p);

// G(a; pi/2) reached along the path: pi (1 - a^2) for a <= 1, -2 pi log a for a > 1.
double G_half_pi(double a);

// The path point at Phi = acos(L*)/2 with L* = (eps^2 - 1 - a^2) / (2a). This is
// Phi(phi) when a^2 <= 1 + eps^2 and Phi(phi + pi) otherwise.
PathPoint overlap_path_point(double a, double eps);
// Phi(phi) for a^2 > 1 + eps^2.
PathPoint outer_path_point(double a, double eps);
// Phi = (2 alpha + pi) / 4, a >= 1.
PathPoint turning_path_point(double a);

Flagged h2_checked(double a, double phi);
double h2(double a, double phi);
double h1(double a, double r);

enum class FRepresentation { ChangeOfOrder, DirectG };

// Four-branch closed form for (1/8pi) * integral over Theta(a) of s^2 (log s^2 - 1).
double F_piecewise(const OverlapQuery& q);
// Same integral for a in (1 - eps, 1] through h1 and h2. Kept for cross-checks only.
double F_change_of_order(const OverlapQuery& q);
double F(const OverlapQuery& q, FRepresentation rep);

// (1/8pi) * integral of s^2 (log s^2 - 1) over the part of the lune that lies
// outside the sector |theta| <= pi - phi, counted with the orientation of the
// region itself. Equals F_piecewise for a <= 1.
double F_region(const OverlapQuery& q);

// (pi - phi) eps^2 (log eps^2 - 1) / (4 pi)
double sector_term(const OverlapQuery& q);

double E(const OverlapQuery& q);
double E(Point2 x, double eps);

// Potential of the full unit disc at |x| <= 1.
double disc_potential(double x_norm);

}  // namespace discpot
