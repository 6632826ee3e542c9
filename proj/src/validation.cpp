#include "discpot/validation.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "discpot/asymptotics.hpp"
#include "discpot/dilog.hpp"
#include "discpot/oracle.hpp"
#include "discpot/potential.hpp"

namespace discpot {

namespace {

const std::vector<double> kEpsOracle = {0.5, 0.2, 0.05, 0.01};
const std::vector<double> kEpsBand = {0.5, 0.1, 0.01};

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

double bound(double eps) { return 0.25 * eps * eps * (1.0 - std::log(eps * eps)); }

// Extension by zero outside the band, where the lune is empty or the whole disc.
double F_extended(double a, double eps) {
  if (a < 1.0 - eps || a > 1.0 + eps) return 0.0;
  return F_piecewise(OverlapQuery::make(a, eps));
}

// Jump of f at t. Each one-sided limit is extrapolated from offsets d, 4d, 16d
// as a quadratic in sqrt(offset), which absorbs both a smooth slope and the
// square-root onset F has at the ends of the band.
template <class Fn>
double jump_at(Fn f, double t, double d) {
  auto limit = [&](double sign) {
    return (8.0 / 3.0) * f(t + sign * d) - 2.0 * f(t + sign * 4.0 * d) + (1.0 / 3.0) * f(t + sign * 16.0 * d);
  };
  return std::abs(limit(1.0) - limit(-1.0));
}

std::vector<double> band_points(double eps, std::size_t n) {
  // (1 - eps, 1], right endpoint included
  std::vector<double> a(n);
  for (std::size_t k = 0; k < n; ++k) a[k] = 1.0 - eps + eps * double(k + 1) / double(n);
  a.back() = 1.0;
  return a;
}

}  // namespace

PowerFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {slope, std::exp((sy - slope * sx) / n)};
}

std::vector<OverlapQuery> sample_queries(const std::vector<double>& eps_oracle, std::size_t n_oracle,
                                         const std::vector<double>& eps_band, std::size_t n_band) {
  std::vector<OverlapQuery> qs;
  for (double eps : eps_oracle) {
    for (std::size_t k = 0; k < n_oracle; ++k) {
      qs.push_back(OverlapQuery::make((1.0 + eps) * double(k) / double(n_oracle - 1), eps));
    }
  }
  for (double eps : eps_band) {
    for (double t : {1.0 - eps, 1.0, outer_split(eps), 1.0 + eps}) {
      for (double d : {-16e-9, -4e-9, -1e-9, 1e-9, 4e-9, 16e-9}) qs.push_back(OverlapQuery::make(t + d, eps));
    }
    for (double a : band_points(eps, n_band)) qs.push_back(OverlapQuery::make(a, eps));
  }
  return qs;
}

CheckResult check_oracle_equivalence(const std::vector<double>& eps_list, std::size_t n, double tol,
                                     double threshold) {
  CheckResult r{"1", "oracle equivalence |E - quad_E|", 0.0, threshold, true, ""};
  std::size_t unconverged = 0;
  for (double eps : eps_list) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto q = OverlapQuery::make((1.0 + eps) * double(k) / double(n - 1), eps);
      const QuadResult o = quad_E(q, tol);
      if (!o.converged) ++unconverged;
      r.measured = std::max(r.measured, std::abs(E(q) - o.value));
    }
  }
  r.pass = r.measured <= threshold;
  r.detail = std::to_string(eps_list.size() * n) + " points, " + std::to_string(unconverged) + " unconverged";
  return r;
}

CheckResult check_branch_continuity(const std::vector<double>& eps_list, double offset, double threshold) {
  CheckResult r{"2", "branch continuity jump in E and F_piecewise", 0.0, threshold, true, ""};
  double worst_naive = 0.0;
  for (double eps : eps_list) {
    auto e_of = [eps](double a) { return E(OverlapQuery::make(a, eps)); };
    auto f_of = [eps](double a) { return F_extended(a, eps); };
    for (double t : {1.0 - eps, 1.0, outer_split(eps), 1.0 + eps}) {
      r.measured = std::max({r.measured, jump_at(e_of, t, offset), jump_at(f_of, t, offset)});
      worst_naive = std::max({worst_naive, std::abs(e_of(t + offset) - e_of(t - offset)),
                              std::abs(f_of(t + offset) - f_of(t - offset))});
    }
  }
  r.pass = r.measured <= threshold;
  r.detail = "raw two-point difference incl. slope " + fmt("%.2e", worst_naive);
  return r;
}

CheckResult check_representation_equivalence(const std::vector<double>& eps_list, std::size_t n,
                                             double threshold) {
  CheckResult r{"3", "representation equivalence |F_change_of_order - F_piecewise|", 0.0, threshold, true, ""};
  for (double eps : eps_list) {
    for (double a : band_points(eps, n)) {
      const auto q = OverlapQuery::make(a, eps);
      r.measured = std::max(r.measured, std::abs(F_change_of_order(q) - F_piecewise(q)));
    }
  }
  r.pass = r.measured <= threshold;
  return r;
}

CheckResult check_global_bound(const std::vector<OverlapQuery>& queries) {
  CheckResult r{"4", "global bound violations", 0.0, 0.0, true, ""};
  double worst = -1e300;
  for (const auto& q : queries) {
    const double excess = std::abs(E(q)) - bound(q.eps());
    worst = std::max(worst, excess / bound(q.eps()));
    if (excess > 1e-14) r.measured += 1.0;
  }
  r.pass = r.measured == 0.0;
  r.detail = std::to_string(queries.size()) + " points, max |E|/bound = " + fmt("%.6f", 1.0 + worst);
  return r;
}

CheckResult check_golden_tables() {
  CheckResult r{"5", "golden table rows", 0.0, 1e-12, true, ""};
  int rows = 0;
  auto row = [&](double got, double want) {
    r.measured = std::max(r.measured, std::abs(got - want));
    ++rows;
  };
  auto P = [](double theta, double a) { return std::log(1.0 + a * a + 2.0 * a * chord_L(theta, a)); };

  // angles 0 and 2 pi
  for (double a : {0.3, 0.8, 1.2, 2.0}) {
    for (double th : {0.0, 2.0 * kPi}) {
      row(chord_radius(th, a), 1.0 - a);
      row(chord_L(th, a), -1.0);
      row(P(th, a), 2.0 * std::log(std::abs(1.0 - a)));
      row(phi_map(th, a), kPi / 2.0);
    }
  }
  // pi/2 at a = 1
  row(chord_radius(kPi / 2.0, 1.0), 0.0);
  row(chord_L(kPi / 2.0, 1.0), -1.0);
  row(phi_map(kPi / 2.0, 1.0), kPi / 2.0);
  // alpha, pi - alpha, 2 pi - alpha
  for (double a : {1.05, 1.5, 3.0}) {
    const double al = turning_angle(a);
    const double sa = -std::sqrt(a * a - 1.0);
    const double thetas[3] = {al, kPi - al, 2.0 * kPi - al};
    const double svals[3] = {sa, -sa, sa};
    for (int i = 0; i < 3; ++i) {
      row(chord_radius(thetas[i], a), svals[i]);
      row(chord_L(thetas[i], a), -1.0 / a);
      row(P(thetas[i], a), std::log(a * a - 1.0));
      row(phi_map(thetas[i], a), (2.0 * al + kPi) / 4.0);
    }
  }
  const double eps = 0.3;
  // phi with a^2 <= 1 + eps^2
  for (double a : {0.8, 1.0, 1.03}) {
    const auto q = OverlapQuery::make(a, eps);
    const double phi = intersection_angle(q);
    row(chord_radius(phi, a), eps);
    row(chord_L(phi, a), (eps * eps - 1.0 - a * a) / (2.0 * a));
    row(P(phi, a), 2.0 * std::log(eps));
  }
  // phi with a^2 > 1 + eps^2, and phi + pi
  for (double a : {0.8, 1.1, 1.25}) {
    const auto q = OverlapQuery::make(a, eps);
    const double phi = intersection_angle(q);
    const double d = a * a - 1.0;
    const double s_phi = chord_radius(phi, a);
    if (a * a > 1.0 + eps * eps) {
      row(s_phi, d / eps);
      row(chord_L(phi, a), d * d / (2.0 * a * eps * eps) - (1.0 + a * a) / (2.0 * a));
      row(P(phi, a), 2.0 * std::log(d / eps));
    }
    const double L_phi = chord_L(phi, a);
    row(chord_radius(phi + kPi, a), -d / s_phi);
    row(chord_L(phi + kPi, a), d * d / (2.0 * a * (1.0 + a * a + 2.0 * a * L_phi)) - (1.0 + a * a) / (2.0 * a));
    row(P(phi + kPi, a), 2.0 * std::log(std::abs(d)) - P(phi, a));
  }
  // phi at the band thresholds
  {
    const double a = 1.0 - eps;
    const double phi = intersection_angle(OverlapQuery::make(a, eps));
    row(phi, 0.0);
    row(chord_radius(phi, a), eps);
    row(chord_L(phi, a), -1.0);
    row(phi_map(phi, a), kPi / 2.0);
  }
  {
    const double phi = intersection_angle(OverlapQuery::make(1.0, eps));
    row(phi, std::acos(-eps / 2.0));
    row(chord_radius(phi, 1.0), eps);
    row(chord_L(phi, 1.0), 0.5 * (eps * eps - 2.0));
    row(P(phi, 1.0), 2.0 * std::log(eps));
  }
  {
    const double a = outer_split(eps);
    const double phi = intersection_angle(OverlapQuery::make(a, eps));
    row(phi, std::acos(-eps / std::sqrt(1.0 + eps * eps)));
    row(chord_radius(phi, a), eps);
    row(chord_L(phi, a), -1.0 / std::sqrt(1.0 + eps * eps));
  }
  {
    const double a = 1.0 + eps;
    const double phi = intersection_angle(OverlapQuery::make(a, eps));
    row(phi, kPi);
    row(chord_radius(phi, a), 2.0 + eps);
    row(chord_L(phi, a), 1.0);
    row(P(phi, a), 2.0 * std::log(2.0 + eps));
    row(phi_map(phi, a), 0.0);
  }

  // G at Phi = pi/2
  for (double a : {0.3, 0.8, 1.0}) row(G(a, phi_map(0.0, a)), kPi * (1.0 - a * a));
  for (double a : {1.2, 2.0}) row(G(a, phi_map(0.0, a)), -2.0 * kPi * std::log(a));
  for (double e : {0.1, 0.3}) {
    row(G(1.0 - e, kPi / 2.0), kPi * e * (2.0 - e));
    // a = 1 with Phi(phi) = arccos(eps / 2)
    const double Phi = std::acos(e / 2.0);
    const double closed = 2.0 * dilog(-std::polar(1.0, 2.0 * Phi)).imag() + e * std::sqrt(4.0 - e * e) * (1.0 - std::log(e));
    row(G(overlap_path_point(1.0, e)), closed);
    row(G(1.0, Phi), closed);
    // a = 1 + eps, phi + pi = 2 pi; the sign that makes F vanish there
    row(G(overlap_path_point(1.0 + e, e)), -2.0 * kPi * std::log1p(e));
    row(G(1.0 + e, kPi / 2.0), -2.0 * kPi * std::log1p(e));
  }
  // G at (2 alpha + pi) / 4
  for (double a : {1.05, 1.25, 2.0, 5.0}) {
    const double al = turning_angle(a);
    const double closed = 2.0 * dilog(-a * std::polar(1.0, al + kPi / 2.0)).imag() + (1.0 - a * a) * al +
                          (2.0 - std::log(a * a - 1.0)) * std::sqrt(a * a - 1.0);
    row(G(a, (2.0 * al + kPi) / 4.0), closed);
    row(G(turning_path_point(a)), closed);
  }
  r.pass = r.measured <= r.threshold;
  r.detail = std::to_string(rows) + " values; G(1+eps, pi/2) checked as -2 pi log(1+eps)";
  return r;
}

CheckResult check_asymptotic_accuracy(const std::vector<double>& eps_list, std::size_t n_per_branch) {
  CheckResult r{"6", "asymptotic accuracy max |H_exact - H_asymptotic| / eps", 0.0, 5e-2, true, ""};
  for (double eps : eps_list) {
    const double ls = lambda_split(eps);
    for (std::size_t k = 0; k < n_per_branch; ++k) {
      const double inner = ls * double(k) / double(n_per_branch - 1);
      const double outer = ls + (1.0 - ls) * double(k + 1) / double(n_per_branch);
      for (double lam : {inner, outer}) {
        const LambdaParam p{lam, eps};
        r.measured = std::max(r.measured, std::abs(H_exact(p) - H_asymptotic(p)) / eps);
      }
    }
  }
  r.pass = r.measured <= r.threshold;
  return r;
}

CheckResult check_unit_cubic_expansion() {
  CheckResult r{"7", "cubic expansion at a = 1, log-log error slope", 0.0, 0.0, true, ""};
  const std::vector<double> eps = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
  std::vector<double> err;
  for (double e : eps) err.push_back(std::abs(F_piecewise(OverlapQuery::make(1.0, e)) - F_at_unit_asymptotic(e)));
  const PowerFit fit = fit_power_law(eps, err);
  r.measured = fit.slope;
  r.pass = fit.slope >= 4.5 && fit.slope <= 5.5;
  r.detail = "required [4.5, 5.5], error at 1e-3 = " + fmt("%.3e", err.back());
  return r;
}

CheckResult check_phi_expansion(const std::vector<double>& eps_list, std::size_t n) {
  CheckResult r{"8", "phi expansion max |phi_asymptotic - phi| / eps^3", 0.0, 10.0, true, ""};
  for (double eps : eps_list) {
    for (std::size_t k = 0; k < n; ++k) {
      // lambda of the a that is actually represented
      const double a = a_of_lambda({double(k) / double(n - 1), eps});
      const LambdaParam p = lambda_of_a(a, eps);
      const double phi = intersection_angle(OverlapQuery::make(a, eps));
      r.measured = std::max(r.measured, std::abs(phi_asymptotic(p) - phi) / (eps * eps * eps));
    }
  }
  r.pass = r.measured <= r.threshold;
  return r;
}

CheckResult check_stability() {
  CheckResult r{"9", "stable path: max scaled |E_stable - E| at eps = 1e-5", 0.0, 1e-6, true, ""};
  std::size_t finite = 0;
  std::size_t total = 0;
  for (int j = 1; j <= 14; ++j) {
    const double eps = std::pow(10.0, -j);
    for (int k = 0; k < 1000; ++k) {
      // a = 1 + u eps with u uniform in [-2, 2] covers every regime
      const double a = 1.0 + eps * (-2.0 + 4.0 * k / 999.0);
      ++total;
      if (std::isfinite(E_stable(OverlapQuery::make(a, eps)))) ++finite;
    }
  }
  const double eps = 1e-5;
  const double scale = eps * eps * std::abs(std::log(eps * eps));
  for (int k = 0; k <= 1000; ++k) {
    const auto q = OverlapQuery::make(a_of_lambda({k / 1000.0, eps}), eps);
    r.measured = std::max(r.measured, std::abs(E_stable(q) - E(q)) / scale);
  }
  r.pass = finite == total && r.measured <= r.threshold;
  r.detail = std::to_string(finite) + "/" + std::to_string(total) + " finite";
  return r;
}

CheckResult check_asymmetry(const std::vector<double>& eps_list, std::size_t grid_n) {
  CheckResult r{"10", "asymmetry index eta, log-log slope", 0.0, 0.0, true, ""};
  std::vector<double> eta;
  for (double e : eps_list) eta.push_back(diagnostics_J_eta(e, grid_n).eta);
  const PowerFit fit = fit_power_law(eps_list, eta);
  r.measured = fit.slope;
  r.pass = std::abs(fit.slope - 1.0) <= 0.2 && fit.prefactor >= 5e-3 && fit.prefactor <= 8e-2;
  r.detail = "required 1 +- 0.2, prefactor " + fmt("%.4f", fit.prefactor) + " required [0.005, 0.08]";
  return r;
}

CheckResult check_dilog() {
  CheckResult r{"11", "dilog reflection residual", 0.0, 1e-13, true, ""};
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int n = 0;
  while (n < 100) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) >= 1.0 || z == Complex(0.0, 0.0)) continue;
    ++n;
    const Complex lhs = dilog(z) + dilog(1.0 - z);
    const Complex rhs = kPi * kPi / 6.0 - std::log(z) * std::log(1.0 - z);
    r.measured = std::max(r.measured, std::abs(lhs - rhs));
  }
  double boundary = 0.0;
  for (double a : {1.1, 2.0, 5.0}) boundary = std::max(boundary, std::abs(dilog_lower_boundary(a).imag() + kPi * std::log(a)));
  r.pass = r.measured <= r.threshold && boundary <= 1e-12;
  r.detail = "lower boundary Im error " + fmt("%.2e", boundary) + " (threshold 1e-12)";
  return r;
}

std::vector<CheckResult> run_acceptance() {
  std::vector<CheckResult> out;
  out.push_back(check_oracle_equivalence(kEpsOracle, 200, 1e-12));
  out.push_back(check_branch_continuity(kEpsBand));
  out.push_back(check_representation_equivalence(kEpsBand, 100));
  out.push_back(check_global_bound(sample_queries(kEpsOracle, 200, kEpsBand, 100)));
  out.push_back(check_golden_tables());
  out.push_back(check_asymptotic_accuracy({1e-2, 1e-3, 1e-4}, 51));
  out.push_back(check_unit_cubic_expansion());
  out.push_back(check_phi_expansion({1e-2, 1e-3}, 101));
  out.push_back(check_stability());
  out.push_back(check_asymmetry({1e-2, 1e-3, 1e-4}, 201));
  out.push_back(check_dilog());
  return out;
}

std::string format_check(const CheckResult& r) {
  std::string s = (r.pass ? "PASS " : "FAIL ") + r.id + ". " + r.name + ": " + fmt("%.3e", r.measured);
  if (r.threshold > 0.0) s += " (threshold " + fmt("%.0e", r.threshold) + ")";
  if (!r.detail.empty()) s += "; " + r.detail;
  return s;
}

}  // namespace discpot
