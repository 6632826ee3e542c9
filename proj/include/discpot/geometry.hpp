#pragma once

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace discpot {

inline constexpr double kPi = std::numbers::pi;

// Inverse-trig arguments may overshoot [-1, 1] by this much before we refuse them.
inline constexpr double kClampSlack = 1e-12;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Distance a = |x| between the two centres and the radius eps of the small disc.
// Only eps in (0, 1) is accepted. eps > 1/2 works but is flagged as nonstandard.
class OverlapQuery {
 public:
  static OverlapQuery make(double a, double eps);
  static OverlapQuery from_point(Point2 x, double eps);

  double a() const { return a_; }
  double eps() const { return eps_; }
  bool nonstandard_eps() const { return eps_ > 0.5; }

 private:
  OverlapQuery(double a, double eps) : a_(a), eps_(eps) {}
  double a_;
  double eps_;
};

enum class Regime {
  Nested,            // a <= 1 - eps
  OverlapInnerDisc,  // 1 - eps < a < 1
  OverlapAtUnit,     // a == 1
  OverlapOuterNear,  // 1 < a < sqrt(1 + eps^2)
  OverlapOuterFar,   // sqrt(1 + eps^2) <= a < 1 + eps
  Outside,           // a >= 1 + eps
};

std::string_view to_string(Regime r);

double outer_split(double eps);
Regime classify_regime(const OverlapQuery& q);

// Clamp x into [-1, 1] if it is within kClampSlack of it, otherwise throw.
double clamp_unit(double x, const char* what);

// arccos(c) from one_minus = 1 - c and one_plus = 1 + c supplied in factored,
// cancellation-free form. Each may undershoot 0 by kClampSlack.
double acos_from_sides(double one_minus, double one_plus, const char* what);

double newtonian_kernel(double r);
double newtonian_kernel(Point2 y);

// s(theta) = -a cos theta + sqrt(1 - a^2 sin^2 theta), the signed distance along
// the ray of angle theta to the far side of the unit circle centred at (-a, 0).
// Requires a^2 sin^2 theta <= 1.
double chord_radius(double theta, double a);
// L(theta) = (s(theta)^2 - 1 - a^2) / (2a), i.e. cos of the doubled angle Phi.
double chord_L(double theta, double a);
// Phi(theta) = arccos(L(theta)) / 2.
double phi_map(double theta, double a);

// phi = arccos((1 - a^2 - eps^2) / (2 a eps)), the polar angle of the upper
// intersection point of the two circles. Defined for a in [1 - eps, 1 + eps].
double intersection_angle(const OverlapQuery& q);
// alpha = arcsin(1/a), a >= 1.
double turning_angle(double a);

struct IntersectionGeometry {
  double t = 0.0;  // position of the chord through v+ and v- along the centre line
  double h = 0.0;  // half-length of that chord
  Point2 v_plus;
  Point2 v_minus;
  double phi = 0.0;
  std::optional<double> alpha;
};

IntersectionGeometry intersection_points(const OverlapQuery& q);

struct AngleInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// Angular set Theta(a) over which s(theta) is integrated to obtain F, 1 <= a <= 1 + eps.
// (For a < 1 the set is [0, phi].)
std::vector<AngleInterval> angular_region(const OverlapQuery& q);

}  // namespace discpot
