#include "discpot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace discpot {

OverlapQuery OverlapQuery::make(double a, double eps) {
  if (!std::isfinite(a) || !std::isfinite(eps)) throw DomainError("a and eps must be finite");
  if (a < 0.0) throw DomainError("a must be non-negative, got " + std::to_string(a));
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1), got " + std::to_string(eps));
  return OverlapQuery(a, eps);
}

OverlapQuery OverlapQuery::from_point(Point2 x, double eps) { return make(std::hypot(x.x, x.y), eps); }

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Nested: return "nested";
    case Regime::OverlapInnerDisc: return "overlap_inner";
    case Regime::OverlapAtUnit: return "overlap_unit";
    case Regime::OverlapOuterNear: return "overlap_outer_near";
    case Regime::OverlapOuterFar: return "overlap_outer_far";
    case Regime::Outside: return "outside";
  }
  return "unknown";
}

double outer_split(double eps) { return std::sqrt(1.0 + eps * eps); }

Regime classify_regime(const OverlapQuery& q) {
  const double a = q.a();
  const double eps = q.eps();
  if (a <= 1.0 - eps) return Regime::Nested;
  if (a < 1.0) return Regime::OverlapInnerDisc;
  if (a == 1.0) return Regime::OverlapAtUnit;
  if (a >= 1.0 + eps) return Regime::Outside;
  if (a < outer_split(eps)) return Regime::OverlapOuterNear;
  return Regime::OverlapOuterFar;
}

double clamp_unit(double x, const char* what) {
  if (std::isnan(x) || std::abs(x) > 1.0 + kClampSlack) {
    throw DomainError(std::string(what) + ": argument " + std::to_string(x) + " outside [-1, 1]");
  }
  return std::clamp(x, -1.0, 1.0);
}

double acos_from_sides(double one_minus, double one_plus, const char* what) {
  if (std::isnan(one_minus) || std::isnan(one_plus) || one_minus < -kClampSlack || one_plus < -kClampSlack) {
    throw DomainError(std::string(what) + ": arccos argument outside [-1, 1]");
  }
  return 2.0 * std::atan2(std::sqrt(std::max(one_minus, 0.0)), std::sqrt(std::max(one_plus, 0.0)));
}

double newtonian_kernel(double r) {
  if (!(r > 0.0)) throw DomainError("newtonian_kernel: r must be positive");
  return std::log(r * r) / (4.0 * kPi);
}

double newtonian_kernel(Point2 y) { return newtonian_kernel(std::hypot(y.x, y.y)); }

double chord_radius(double theta, double a) {
  const double as = a * std::abs(std::sin(theta));
  // 1 - a^2 sin^2 factored to keep precision near the tangent direction
  double disc = (1.0 - as) * (1.0 + as);
  if (disc < 0.0) {
    if (disc < -kClampSlack) throw DomainError("chord_radius: ray misses the unit disc");
    disc = 0.0;
  }
  return -a * std::cos(theta) + std::sqrt(disc);
}

double chord_L(double theta, double a) {
  if (!(a > 0.0)) throw DomainError("chord_L: a must be positive");
  const double s = chord_radius(theta, a);
  return (s * s - 1.0 - a * a) / (2.0 * a);
}

double phi_map(double theta, double a) {
  if (!(a > 0.0)) throw DomainError("phi_map: a must be positive");
  // L = -a sin^2 - cos sqrt(D); the side of 1 +- L that cancels carries a sin^2 factor
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  const double as = a * std::abs(sn);
  const double root = std::sqrt(std::max((1.0 - as) * (1.0 + as), 0.0));
  const double q = 1.0 + a * a * c * c;
  const double s2 = sn * sn;
  double one_plus_L;
  double one_minus_L;
  if (c >= 0.0) {
    one_plus_L = s2 * (q / (1.0 + c * root) - a);
    one_minus_L = 1.0 + c * root + a * s2;
  } else {
    one_plus_L = 1.0 - c * root - a * s2;
    one_minus_L = s2 * (q / (1.0 - c * root) + a);
  }
  return 0.5 * acos_from_sides(one_minus_L, one_plus_L, "phi_map");
}

double intersection_angle(const OverlapQuery& q) {
  const double a = q.a();
  const double eps = q.eps();
  if (a == 0.0) throw DomainError("intersection_angle: circles are concentric");
  const double d = 2.0 * a * eps;
  return acos_from_sides(((a - 1.0) + eps) * (a + eps + 1.0) / d, ((1.0 - a) + eps) * ((1.0 + a) - eps) / d,
                         "intersection_angle");
}

double turning_angle(double a) {
  if (!(a >= 1.0)) throw DomainError("turning_angle: requires a >= 1");
  return std::asin(1.0 / a);
}

IntersectionGeometry intersection_points(const OverlapQuery& q) {
  const double a = q.a();
  const double eps = q.eps();
  IntersectionGeometry g;
  g.phi = intersection_angle(q);
  const double px = (1.0 - a * a - eps * eps) / (2.0 * a);
  double prod = ((a + eps) * (a + eps) - 1.0) * (1.0 - (a - eps) * (a - eps));
  if (prod < 0.0) prod = 0.0;
  const double py = std::sqrt(prod) / (2.0 * a);
  g.v_plus = {px, py};
  g.v_minus = {px, -py};
  g.t = (a * a + eps * eps - 1.0) / (2.0 * a);
  g.h = py;
  if (a >= 1.0) g.alpha = turning_angle(a);
  return g;
}

std::vector<AngleInterval> angular_region(const OverlapQuery& q) {
  const double a = q.a();
  const double eps = q.eps();
  if (a < 1.0 || a > 1.0 + eps + kClampSlack) throw DomainError("angular_region: a outside [1, 1 + eps]");
  const double phi = intersection_angle(q);
  if (a == 1.0) return {{kPi / 2.0, phi}};
  const double alpha = turning_angle(a);
  if (a < outer_split(eps)) return {{2.0 * kPi - alpha, 2.0 * kPi}, {kPi - alpha, phi}};
  return {{phi + kPi, 2.0 * kPi}};
}

}  // namespace discpot
