#include "discpot/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace discpot {

namespace {

void require_band(const OverlapQuery& q, const char* what) {
  const double a = q.a();
  const double eps = q.eps();
  if (a < 1.0 - eps - kClampSlack || a > 1.0 + eps + kClampSlack) {
    throw DomainError(std::string(what) + ": a outside [1 - eps, 1 + eps]");
  }
}

PathPoint from_L(double a, double L, double one_plus_L, double one_minus_L, Complex w, double log_abs_w2) {
  PathPoint p;
  p.a = a;
  p.sin_A = std::sqrt(std::max(one_plus_L, 0.0) * std::max(one_minus_L, 0.0));
  p.cos_A = -L;
  p.A = std::atan2(p.sin_A, p.cos_A);
  p.w = w;
  p.log_abs_w2 = log_abs_w2;
  return p;
}

}  // namespace

Flagged G_checked(const PathPoint& p) {
  bool loss = false;
  const double im = im_dilog_on_path(p, &loss);
  double log_term = 0.0;
  if (std::norm(p.w) < 1e-300) {
    // a = 1, phi = pi/2: sin 2phi -> 0 wins against the log
    loss = true;
  } else {
    log_term = p.a * (2.0 - p.log_abs_w2) * p.sin_A;
  }
  const double val = 2.0 * im + (1.0 - p.a) * (1.0 + p.a) * (p.two_phi() - std::arg(p.w)) + log_term;
  return {val, loss};
}

double G(const PathPoint& p) { return G_checked(p).value; }

Flagged G_checked(double a, double phi) {
  if (!(a > 0.0)) throw DomainError("G: a must be positive");
  return G_checked(PathPoint::from_angle(a, phi));
}

double G(double a, double phi) { return G_checked(a, phi).value; }

double G_half_pi(double a) {
  if (!(a > 0.0)) throw DomainError("G_half_pi: a must be positive");
  return a <= 1.0 ? kPi * (1.0 - a) * (1.0 + a) : -2.0 * kPi * std::log(a);
}

PathPoint overlap_path_point(double a, double eps) {
  const double L = (eps * eps - 1.0 - a * a) / (2.0 * a);
  const double one_plus_L = ((a - 1.0) + eps) * ((1.0 - a) + eps) / (2.0 * a);
  const double one_minus_L = ((1.0 + a) * (1.0 + a) - eps * eps) / (2.0 * a);
  PathPoint p = from_L(a, L, one_plus_L, one_minus_L, {}, 2.0 * std::log(eps));
  p.w = Complex(0.5 * ((1.0 - a) * (1.0 + a) + eps * eps), a * p.sin_A);
  return p;
}

PathPoint outer_path_point(double a, double eps) {
  const double e2 = eps * eps;
  const double d = (a - 1.0) * (a + 1.0);
  const double L = d * d / (2.0 * a * e2) - (1.0 + a * a) / (2.0 * a);
  const double one_plus_L = (a - 1.0) * (a - 1.0) * ((a + 1.0) * (a + 1.0) - e2) / (2.0 * a * e2);
  const double one_minus_L = (1.0 + a) * (1.0 + a) * (e2 - (a - 1.0) * (a - 1.0)) / (2.0 * a * e2);
  PathPoint p = from_L(a, L, one_plus_L, one_minus_L, {}, 2.0 * std::log(d / eps));
  p.w = Complex(0.5 * d * (d / e2 - 1.0), a * p.sin_A);
  return p;
}

PathPoint turning_path_point(double a) {
  if (!(a >= 1.0)) throw DomainError("turning_path_point: requires a >= 1");
  const double sigma = std::sqrt((a - 1.0) * (a + 1.0));
  PathPoint p;
  p.a = a;
  p.A = std::atan(sigma);
  p.sin_A = sigma / a;
  p.cos_A = 1.0 / a;
  p.w = Complex(0.0, sigma);
  p.log_abs_w2 = 2.0 * std::log(sigma);
  return p;
}

Flagged h2_checked(double a, double phi) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("h2: a must lie in (0, 1]");
  if (!(phi >= 0.0 && phi <= kPi)) throw DomainError("h2: phi outside [0, pi]");
  if (phi == 0.0) return {0.0, false};
  if (a == 1.0 && phi < 1e-14) return {0.0, true};
  const double s = std::sin(0.5 * phi);
  // 1 - a e^{i phi}
  const Complex w((1.0 - a) + 2.0 * a * s * s, -a * std::sin(phi));
  const double log_abs_w2 = std::log((1.0 - a) * (1.0 - a) + 4.0 * a * s * s);
  const DilogResult li = dilog_checked(std::polar(a, phi));
  const double val = 2.0 * li.value.imag() + (1.0 - a) * (1.0 + a) * (phi - std::arg(w)) +
                     a * (log_abs_w2 - 2.0) * std::sin(phi);
  return {val, li.accuracy_loss};
}

double h2(double a, double phi) { return h2_checked(a, phi).value; }

double h1(double a, double r) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("h1: a must lie in (0, 1]");
  if (r < (1.0 - a) - kClampSlack || r > 1.0 + a + kClampSlack) throw DomainError("h1: r outside [1 - a, 1 + a]");
  const double chi = acos_from_sides((r - (1.0 - a)) * (r + (1.0 - a)) / (2.0 * a),
                                     ((1.0 + a) - r) * (1.0 + a + r) / (2.0 * a), "h1 chi");
  if (r <= 0.0) return h2(a, chi) / (8.0 * kPi);
  const double d = 2.0 * a * r;
  const double acos_ell = acos_from_sides(((a - 1.0) + r) * (a + r + 1.0) / d, ((1.0 - a) + r) * ((1.0 + a) - r) / d, "h1 ell");
  const double r2 = r * r;
  return (r2 * (std::log(r2) - 1.0) * acos_ell + h2(a, chi)) / (8.0 * kPi);
}

double F_change_of_order(const OverlapQuery& q) {
  const double a = q.a();
  const double eps = q.eps();
  if (!(a > 1.0 - eps && a <= 1.0)) throw DomainError("F_change_of_order: a outside (1 - eps, 1]");
  const double phi = intersection_angle(q);
  const double s = chord_radius(phi, a);
  const double s2 = s * s;
  return phi * s2 * (std::log(s2) - 1.0) / (8.0 * kPi) - (h1(a, s) - h1(a, 1.0 - a));
}

double F_piecewise(const OverlapQuery& q) {
  require_band(q, "F_piecewise");
  const double a = q.a();
  const double eps = q.eps();
  double val;
  if (a <= 1.0) {
    val = G(overlap_path_point(a, eps)) - G_half_pi(a);
  } else if (a < outer_split(eps)) {
    val = G(overlap_path_point(a, eps)) - 2.0 * kPi * std::log(a) - 2.0 * G(turning_path_point(a));
  } else {
    val = -2.0 * kPi * std::log(a) - G(overlap_path_point(a, eps));
  }
  return val / (8.0 * kPi);
}

double F(const OverlapQuery& q, FRepresentation rep) {
  return rep == FRepresentation::ChangeOfOrder ? F_change_of_order(q) : F_piecewise(q);
}

double F_region(const OverlapQuery& q) {
  require_band(q, "F_region");
  return (G(overlap_path_point(q.a(), q.eps())) - G_half_pi(q.a())) / (8.0 * kPi);
}

double sector_term(const OverlapQuery& q) {
  const double e2 = q.eps() * q.eps();
  return (kPi - intersection_angle(q)) * e2 * (std::log(e2) - 1.0) / (4.0 * kPi);
}

double E(const OverlapQuery& q) {
  switch (classify_regime(q)) {
    case Regime::Nested: {
      const double e2 = q.eps() * q.eps();
      return 0.25 * e2 * (std::log(e2) - 1.0);
    }
    case Regime::Outside:
      return 0.0;
    default:
      return sector_term(q) + 2.0 * F_region(q);
  }
}

double E(Point2 x, double eps) { return E(OverlapQuery::from_point(x, eps)); }

double disc_potential(double x_norm) {
  if (!(x_norm >= 0.0 && x_norm <= 1.0)) throw DomainError("disc_potential: requires 0 <= |x| <= 1");
  return 0.25 * (x_norm * x_norm - 1.0);
}

}  // namespace discpot
