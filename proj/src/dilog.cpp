#include "discpot/dilog.hpp"

#include <array>
#include <cmath>

#include "discpot/geometry.hpp"

namespace discpot {

namespace {

constexpr double kPi2Over6 = kPi * kPi / 6.0;
constexpr int kMaxTerms = 200;
constexpr double kRelStop = 1e-17;

// B_{2k} / (2k+1)! for k = 1..  (Li2(z) = u - u^2/4 + sum_k c_k u^{2k+1}, u = -log(1-z))
constexpr std::array<double, 20> kBernoulliCoeffs = {
    0.027777777777777776,
    -0.00027777777777777778,
    4.7241118669690098e-06,
    -9.1857730746619641e-08,
    1.8978869988971001e-09,
    -4.0647616451442256e-11,
    8.9216910204564523e-13,
    -1.9939295860721074e-14,
    4.5189800296199183e-16,
    -1.0356517612181247e-17,
    2.395218621026187e-19,
    -5.581785874325009e-21,
    1.3091507554183213e-22,
    -3.0874198024267403e-24,
    7.3159756527022029e-26,
    -1.7408456572340009e-27,
    4.1576356446138999e-29,
    -9.9621484882846217e-31,
    2.3940344248961652e-32,
    -5.7683473553673897e-34,
};

DilogResult power_series(Complex z) {
  Complex sum = 0.0;
  Complex zn = z;
  for (int n = 1; n <= kMaxTerms; ++n) {
    const Complex term = zn / (double(n) * double(n));
    sum += term;
    if (std::abs(term) < kRelStop * (std::abs(sum) + 1.0)) return {sum, false};
    zn *= z;
  }
  return {sum, true};
}

DilogResult bernoulli_series(Complex z) {
  const Complex u = -std::log(1.0 - z);
  const Complex u2 = u * u;
  Complex sum = u - 0.25 * u2;
  Complex un = u * u2;
  for (double c : kBernoulliCoeffs) {
    const Complex term = c * un;
    sum += term;
    if (std::abs(term) < kRelStop * (std::abs(sum) + 1.0)) return {sum, false};
    un *= u2;
  }
  return {sum, true};
}

// |z| <= 1
DilogResult dilog_unit(Complex z) {
  if (z == Complex(1.0, 0.0)) return {kPi2Over6, false};
  if (std::abs(z) <= 0.5) return power_series(z);
  if (z.real() > 0.5) {
    // reflection
    const Complex w = 1.0 - z;
    DilogResult r = dilog_unit(w);
    r.value = kPi2Over6 - std::log(z) * std::log(w) - r.value;
    return r;
  }
  return bernoulli_series(z);
}

}  // namespace

DilogResult dilog_checked(Complex z) {
  if (z == Complex(0.0, 0.0)) return {0.0, false};
  if (std::abs(z) <= 1.0) return dilog_unit(z);
  // inversion; log(-z) carries the signed zero so the cut gets the right side
  DilogResult r = dilog_unit(1.0 / z);
  const Complex l = std::log(-z);
  r.value = -kPi2Over6 - 0.5 * l * l - r.value;
  return r;
}

Complex dilog(Complex z) { return dilog_checked(z).value; }

Complex dilog_lower_boundary(double a) {
  if (!(a > 1.0)) throw DomainError("dilog_lower_boundary: requires a > 1");
  const double la = std::log(a);
  const double re = 2.0 * kPi2Over6 - 0.5 * la * la - dilog(1.0 / a).real();
  return {re, -kPi * la};
}

PathPoint PathPoint::from_angle(double a, double phi) {
  if (!(a >= 0.0)) throw DomainError("PathPoint: a must be non-negative");
  if (!(phi >= 0.0 && phi <= kPi / 2.0)) throw DomainError("PathPoint: phi outside [0, pi/2]");
  PathPoint p;
  p.a = a;
  p.A = kPi - 2.0 * phi;
  p.sin_A = std::sin(p.A);
  p.cos_A = std::cos(p.A);
  const double s = std::sin(0.5 * p.A);
  p.w = Complex((1.0 - a) + 2.0 * a * s * s, a * p.sin_A);
  p.log_abs_w2 = std::log((1.0 - a) * (1.0 - a) + 4.0 * a * s * s);
  return p;
}

double PathPoint::two_phi() const { return kPi - A; }

double im_dilog_on_path(const PathPoint& p, bool* accuracy_loss) {
  if (p.a == 0.0) return 0.0;
  DilogResult r;
  double im;
  if (p.log_abs_w2 <= 0.0) {
    // 1 - z lies in the unit disc: reflect, which stays accurate near z = 1
    r = dilog_checked(p.w);
    const double log_w = 0.5 * p.log_abs_w2;
    const double cross = (p.A == 0.0) ? 0.0 : p.A * log_w;
    im = -std::log(p.a) * std::arg(p.w) + cross - r.value.imag();
  } else {
    const Complex z(p.a * p.cos_A, -p.a * p.sin_A);
    if (p.sin_A == 0.0 && z.real() > 1.0) {
      im = -kPi * std::log(z.real());
    } else {
      r = dilog_checked(z);
      im = r.value.imag();
    }
  }
  if (accuracy_loss) *accuracy_loss = r.accuracy_loss;
  return im;
}

double im_dilog_on_path(double a, double phi) { return im_dilog_on_path(PathPoint::from_angle(a, phi)); }

}  // namespace discpot
