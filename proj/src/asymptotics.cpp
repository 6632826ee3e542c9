#include "discpot/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "discpot/dilog.hpp"
#include "discpot/potential.hpp"

namespace discpot {

namespace {

void check_param(const LambdaParam& p) {
  if (!(p.lam >= 0.0 && p.lam <= 1.0)) throw DomainError("lambda outside [0, 1]");
  if (!(p.eps > 0.0 && p.eps < 1.0)) throw DomainError("eps outside (0, 1)");
}

double sqrt_lam(double lam) { return std::sqrt(std::max(lam * (1.0 - lam), 0.0)); }

// ((1 - a^2) + 2 log a) / 8 for a = 1 + d > 1, the jump between the two
// values of G(a; pi/2) divided by 8 pi.
double unit_log_gap(double d) {
  if (d < 1e-3) {
    double sum = -0.25 * d * d;
    double dn = d * d * d;
    for (int n = 3; n < 12; ++n) {
      sum += ((n % 2 == 0) ? -1.0 : 1.0) * dn / (4.0 * n);
      dn *= d;
    }
    return sum;
  }
  return 0.25 * std::log1p(d) - 0.125 * d * (2.0 + d);
}

}  // namespace

LambdaParam lambda_of_a(double a, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps outside (0, 1)");
  if (a < 1.0 - eps - kClampSlack || a > 1.0 + eps + kClampSlack) throw DomainError("a outside [1 - eps, 1 + eps]");
  return {std::clamp((a - 1.0) / (2.0 * eps) + 0.5, 0.0, 1.0), eps};
}

double a_of_lambda(const LambdaParam& p) {
  check_param(p);
  return 1.0 - (1.0 - 2.0 * p.lam) * p.eps;
}

AsymptoticBranch branch_of(const LambdaParam& p) {
  check_param(p);
  // a^2 - 1 - eps^2 = (2 lam - 1) eps (2 + (2 lam - 1) eps) - eps^2
  const double b = 2.0 * p.lam - 1.0;
  return b * (2.0 + b * p.eps) <= p.eps ? AsymptoticBranch::Inner : AsymptoticBranch::Outer;
}

double lambda_split(double eps) { return ((eps - 1.0) + std::sqrt(1.0 + eps * eps)) / (2.0 * eps); }

AsymptoticCoeffs inner_coeffs(double lam) {
  if (!(lam >= 0.0 && lam <= 1.0)) throw DomainError("lambda outside [0, 1]");
  const double m = 1.0 - 2.0 * lam;
  const double s = sqrt_lam(lam);
  const double omega = std::acos(std::clamp(m, -1.0, 1.0));
  AsymptoticCoeffs c;
  c.branch = AsymptoticBranch::Inner;
  c.c_log = m * s / (4.0 * kPi);
  c.c_quad = m * (m * omega - 3.0 * s) / (4.0 * kPi);
  return c;
}

AsymptoticCoeffs outer_coeffs(double lam) {
  if (!(lam > 0.5 && lam <= 1.0)) throw DomainError("outer coefficients need lambda in (1/2, 1]");
  const double b = 2.0 * lam - 1.0;
  const double s = sqrt_lam(lam);
  const double omega = std::acos(b);
  const double lg = std::log(4.0 * lam - 2.0);
  // -e^{2 i omega} with cos 2w = 2b^2 - 1 and sin 2w = 2b sqrt(1 - b^2)
  const Complex z(1.0 - 2.0 * b * b, -2.0 * b * std::sqrt(std::max(1.0 - b * b, 0.0)));
  AsymptoticCoeffs c;
  c.branch = AsymptoticBranch::Outer;
  c.c0 = (dilog(z).imag() + 4.0 * b * (1.0 - lg) * s) / (4.0 * kPi);
  c.c1 = b * ((kPi - 2.0 * omega) + 2.0 * b * (1.0 - 2.0 * lg) * s) / (4.0 * kPi);
  c.c2 = b * b * (kPi - b * (1.0 + 2.0 * lg) * s) / (8.0 * kPi);
  return c;
}

AsymptoticCoeffs coeffs(const LambdaParam& p) {
  return branch_of(p) == AsymptoticBranch::Inner ? inner_coeffs(p.lam) : outer_coeffs(p.lam);
}

double H_exact(const LambdaParam& p) {
  const double a = a_of_lambda(p);
  const PathPoint pt =
      branch_of(p) == AsymptoticBranch::Inner ? overlap_path_point(a, p.eps) : outer_path_point(a, p.eps);
  return (G(pt) - kPi * (1.0 - a) * (1.0 + a)) / (8.0 * kPi);
}

double H_inner_continued(const LambdaParam& p) {
  const double a = a_of_lambda(p);
  return (G(overlap_path_point(a, p.eps)) - kPi * (1.0 - a) * (1.0 + a)) / (8.0 * kPi);
}

double H_asymptotic(const LambdaParam& p) {
  const double e = p.eps;
  const AsymptoticBranch br = branch_of(p);
  if (br == AsymptoticBranch::Inner) {
    const AsymptoticCoeffs c = inner_coeffs(p.lam);
    return c.c_log * e * e * std::log(e * e) + c.c_quad * e * e;
  }
  if (4.0 * p.lam - 2.0 < 1e-14) return H_exact(p);
  const AsymptoticCoeffs c = outer_coeffs(p.lam);
  return c.c0 + (c.c1 + c.c2 * e) * e;
}

double F_at_unit_asymptotic(double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) throw DomainError("F_at_unit_asymptotic: eps outside (0, 1/2]");
  const double e3 = eps * eps * eps;
  return (2.0 * e3 * std::log(e3) - 5.0 * e3) / (144.0 * kPi);
}

double phi_asymptotic(const LambdaParam& p) {
  check_param(p);
  const double m = 1.0 - 2.0 * p.lam;
  const double s = sqrt_lam(p.lam);
  return std::acos(std::clamp(m, -1.0, 1.0)) + s * p.eps + 0.75 * m * s * p.eps * p.eps;
}

double E_asymptotic(const OverlapQuery& q) {
  const Regime r = classify_regime(q);
  const double e2 = q.eps() * q.eps();
  if (r == Regime::Nested) return 0.25 * e2 * (std::log(e2) - 1.0);
  if (r == Regime::Outside) return 0.0;
  const LambdaParam p = lambda_of_a(q.a(), q.eps());
  const AsymptoticCoeffs c = inner_coeffs(p.lam);
  double f = c.c_log * e2 * std::log(e2) + c.c_quad * e2;
  if (q.a() > 1.0) f += unit_log_gap(q.a() - 1.0);
  return sector_term(q) + 2.0 * f;
}

double E_stable(const OverlapQuery& q, const StableSettings& settings) {
  if (q.eps() > settings.threshold) return E(q);
  return E_asymptotic(q);
}

AsymmetryDiagnostics diagnostics_J_eta(double eps, std::size_t grid_n) {
  if (grid_n < 3) throw DomainError("diagnostics_J_eta: grid_n must be at least 3");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps outside (0, 1)");
  AsymmetryDiagnostics d;
  d.lambda.resize(grid_n);
  d.J.resize(grid_n);
  const double scale = eps * eps * std::log(eps * eps);
  for (std::size_t k = 0; k < grid_n; ++k) {
    const double lam = double(k) / double(grid_n - 1);
    const double a = a_of_lambda({lam, eps});
    d.lambda[k] = lam;
    d.J[k] = F_piecewise(OverlapQuery::make(a, eps)) / scale;
  }
  for (std::size_t k = 0; k < grid_n; ++k) d.eta = std::max(d.eta, std::abs(d.J[k] - d.J[grid_n - 1 - k]));
  return d;
}

}  // namespace discpot
