#pragma once

#include <complex>

namespace discpot {

using Complex = std::complex<double>;

struct DilogResult {
  Complex value;
  bool accuracy_loss = false;  // a series hit its term cap before converging
};

// Principal branch of Li2, cut along [1, inf). On the cut the imaginary part
// follows the sign of Im z, so real z > 1 with +0 imaginary part gives the
// value approached from above.
DilogResult dilog_checked(Complex z);
Complex dilog(Complex z);

// Li2(a - i0) for a > 1: the limit approached from below the cut.
Complex dilog_lower_boundary(double a);

// A point of the path z = -a e^{2 i phi}, phi in [0, pi/2], written as
// z = a e^{-iA} with A = pi - 2 phi in [0, pi]. The fields are redundant so
// callers can supply cancellation-free values of sin A, 1 - z and log|1 - z|^2.
struct PathPoint {
  double a = 0.0;
  double A = 0.0;
  double sin_A = 0.0;
  double cos_A = 1.0;
  Complex w;                // 1 - z = 1 + a e^{2 i phi}
  double log_abs_w2 = 0.0;  // log |w|^2

  static PathPoint from_angle(double a, double phi);
  double two_phi() const;
};

// Im Li2(-a e^{2 i phi}) continued along the path from phi = 0. Equals the
// principal value except at phi = pi/2 with a > 1, where the limit from below
// the cut is returned.
double im_dilog_on_path(const PathPoint& p, bool* accuracy_loss = nullptr);
double im_dilog_on_path(double a, double phi);

}  // namespace discpot
