#include "discpot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace discpot {

namespace {

void check_tol(double tol) {
  if (!(tol >= kMinOracleTol)) throw DomainError("oracle tolerance must be at least 1e-13");
}

double theta_integrand(double theta, double a) {
  const double s = chord_radius(theta, a);
  if (s == 0.0) return 0.0;
  const double s2 = s * s;
  return s2 * (std::log(s2) - 1.0) / (8.0 * kPi);
}

QuadResult integrate_theta(double lo, double hi, double a, double tol) {
  return integrate_adaptive([a](double t) { return theta_integrand(t, a); }, lo, hi, tol);
}

}  // namespace

QuadResult quad_F(const OverlapQuery& q, double tol) {
  check_tol(tol);
  if (q.a() < 1.0) {
    if (q.a() < 1.0 - q.eps() - kClampSlack) throw DomainError("quad_F: a outside [1 - eps, 1 + eps]");
    return integrate_theta(0.0, intersection_angle(q), q.a(), tol);
  }
  const auto intervals = angular_region(q);
  QuadResult total;
  total.subdivisions = 0;
  for (const auto& iv : intervals) accumulate(total, integrate_theta(iv.lo, iv.hi, q.a(), tol / intervals.size()));
  return total;
}

QuadResult quad_F_region(const OverlapQuery& q, double tol) {
  check_tol(tol);
  const double a = q.a();
  if (a <= 1.0) return quad_F(q, tol);
  const auto intervals = angular_region(q);
  QuadResult total;
  total.subdivisions = 0;
  if (intervals.size() == 2) {
    // [2pi - alpha, 2pi] carries the near boundary of the unit circle and is subtracted
    QuadResult near = integrate_theta(intervals[0].lo, intervals[0].hi, a, 0.5 * tol);
    near.value = -near.value;
    accumulate(total, integrate_theta(intervals[1].lo, intervals[1].hi, a, 0.5 * tol));
    accumulate(total, near);
  } else {
    QuadResult r = integrate_theta(intervals[0].lo, intervals[0].hi, a, tol);
    r.value = -r.value;
    accumulate(total, r);
  }
  return total;
}

QuadResult quad_E(const OverlapQuery& q, double tol) {
  check_tol(tol);
  const double e2 = q.eps() * q.eps();
  QuadResult r;
  r.subdivisions = 1;
  switch (classify_regime(q)) {
    case Regime::Nested:
      r.value = 0.25 * e2 * (std::log(e2) - 1.0);
      return r;
    case Regime::Outside:
      return r;
    default:
      break;
  }
  const double phi = intersection_angle(q);
  QuadResult f = quad_F_region(q, 0.5 * tol);
  r.value = (kPi - phi) * e2 * (std::log(e2) - 1.0) / (4.0 * kPi) + 2.0 * f.value;
  r.err_estimate = 2.0 * f.err_estimate;
  r.subdivisions = f.subdivisions;
  r.converged = f.converged;
  return r;
}

QuadResult quad_E_polar2d(const OverlapQuery& q, double tol) {
  check_tol(tol);
  const double a = q.a();
  const double eps = q.eps();
  // unit disc centred at (-a, 0): r^2 + 2 a r cos(theta) + a^2 - 1 <= 0
  bool inner_ok = true;
  auto ray = [&](double theta) {
    const double b = a * std::cos(theta);
    const double disc = b * b - (a * a - 1.0);
    if (disc <= 0.0) return 0.0;
    const double sq = std::sqrt(disc);
    const double lo = std::max(-b - sq, 0.0);
    const double hi = std::min(-b + sq, eps);
    if (hi <= lo) return 0.0;
    const QuadResult r = integrate_adaptive(
        [](double rho) { return rho > 0.0 ? rho * std::log(rho) : 0.0; }, lo, hi, 0.01 * tol);
    inner_ok = inner_ok && r.converged;
    return r.value / kPi;  // upper half doubled, times 1/2pi
  };
  std::vector<double> cuts = {0.0, kPi};
  if (a > 0.0 && std::abs(a - 1.0) < eps) cuts.push_back(intersection_angle(q));
  if (a > 1.0) cuts.push_back(kPi - turning_angle(a));
  std::sort(cuts.begin(), cuts.end());
  QuadResult total;
  total.subdivisions = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    accumulate(total, integrate_adaptive(ray, cuts[i], cuts[i + 1], 0.5 * tol / (cuts.size() - 1)));
  }
  total.converged = total.converged && inner_ok;
  return total;
}

QuadResult quad_h2(double a, double phi, double tol) {
  check_tol(tol);
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("quad_h2: a must lie in (0, 1]");
  if (!(phi >= 0.0 && phi <= kPi)) throw DomainError("quad_h2: phi outside [0, pi]");
  auto f = [a](double u) {
    const double s = std::sin(0.5 * u);
    const double m = (1.0 - a) * (1.0 - a) + 4.0 * a * s * s;
    if (m == 0.0) return 0.0;
    return -(1.0 - a * std::cos(u)) * (std::log(m) - 1.0);
  };
  return integrate_adaptive(f, 0.0, phi, tol);
}

QuadResult quad_h1_increment(double a, double r0, double r1, double tol) {
  check_tol(tol);
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("quad_h1_increment: a must lie in (0, 1]");
  auto f = [a](double r) {
    if (r <= 0.0) return 0.0;
    const double ell = std::clamp((1.0 - a * a - r * r) / (2.0 * a * r), -1.0, 1.0);
    return std::acos(ell) * r * std::log(r) / (2.0 * kPi);
  };
  return integrate_adaptive(f, r0, r1, tol);
}

}  // namespace discpot
