#pragma once

#include <cstddef>
#include <vector>

#include "discpot/geometry.hpp"

namespace discpot {

// a = 1 - (1 - 2 lam) eps
struct LambdaParam {
  double lam = 0.5;
  double eps = 0.1;
};

LambdaParam lambda_of_a(double a, double eps);
double a_of_lambda(const LambdaParam& p);

enum class AsymptoticBranch { Inner, Outer };

// Inner if a^2 <= 1 + eps^2.
AsymptoticBranch branch_of(const LambdaParam& p);
// Largest lam on the Inner branch.
double lambda_split(double eps);

struct AsymptoticCoeffs {
  AsymptoticBranch branch = AsymptoticBranch::Inner;
  double c_log = 0.0;   // Inner: eps^2 log eps^2
  double c_quad = 0.0;  // Inner: eps^2
  double c0 = 0.0;      // Outer: eps^0, eps^1, eps^2
  double c1 = 0.0;
  double c2 = 0.0;
};

AsymptoticCoeffs inner_coeffs(double lam);
AsymptoticCoeffs outer_coeffs(double lam);
AsymptoticCoeffs coeffs(const LambdaParam& p);

// (G(a, Phi(phi)) - pi (1 - a^2)) / (8 pi)
double H_exact(const LambdaParam& p);
// The same with Phi taken from the inner formula for every lam. This is the
// function the Inner expansion approximates on the whole band.
double H_inner_continued(const LambdaParam& p);
double H_asymptotic(const LambdaParam& p);

double F_at_unit_asymptotic(double eps);
double phi_asymptotic(const LambdaParam& p);

struct StableSettings {
  double threshold = 1e-5;
};

// E with F_region replaced by its eps^2 log eps^2 / eps^2 expansion, for any eps.
double E_asymptotic(const OverlapQuery& q);
// Exact E above the threshold, E_asymptotic at or below it.
double E_stable(const OverlapQuery& q, const StableSettings& settings = {});

struct AsymmetryDiagnostics {
  std::vector<double> lambda;
  std::vector<double> J;
  double eta = 0.0;
};

// J(lam) = F_piecewise / (eps^2 log eps^2) on a uniform grid over [0, 1] and
// eta = max |J(lam) - J(1 - lam)|.
AsymmetryDiagnostics diagnostics_J_eta(double eps, std::size_t grid_n);

}  // namespace discpot
