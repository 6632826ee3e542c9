#include <doctest.h>

#include <cmath>
#include <vector>

#include "discpot/asymptotics.hpp"
#include "discpot/dilog.hpp"
#include "discpot/potential.hpp"
#include "discpot/validation.hpp"

using namespace discpot;

TEST_SUITE("asymptotics") {
  TEST_CASE("lambda maps") {
    CHECK(a_of_lambda({0.5, 0.1}) == 1.0);
    CHECK(a_of_lambda({0.0, 0.1}) == doctest::Approx(0.9));
    CHECK(a_of_lambda({1.0, 0.1}) == doctest::Approx(1.1));
    CHECK(lambda_of_a(1.05, 0.1).lam == doctest::Approx(0.75).epsilon(1e-14));
    for (double lam : {0.0, 0.2, 0.5, 0.77, 1.0}) CHECK(lambda_of_a(a_of_lambda({lam, 0.01}), 0.01).lam == doctest::Approx(lam).epsilon(1e-12));
    CHECK_THROWS_AS(lambda_of_a(0.5, 0.1), DomainError);
    CHECK_THROWS_AS(a_of_lambda({1.5, 0.1}), DomainError);
  }

  TEST_CASE("branch split") {
    for (double eps : {0.1, 1e-3}) {
      const double ls = lambda_split(eps);
      CHECK(ls > 0.5);
      CHECK(branch_of({ls - 1e-9, eps}) == AsymptoticBranch::Inner);
      CHECK(branch_of({std::min(ls + 1e-9, 1.0), eps}) == AsymptoticBranch::Outer);
      const double a = a_of_lambda({ls, eps});
      CHECK(a * a == doctest::Approx(1.0 + eps * eps).epsilon(1e-14));
    }
  }

  TEST_CASE("H exact") {
    CHECK(std::abs(H_exact({0.0, 0.125})) <= 1e-15);
    CHECK(H_exact({0.5, 0.125}) == doctest::Approx(F_piecewise(OverlapQuery::make(1.0, 0.125))).epsilon(1e-13));
    const LambdaParam q{0.25, 0.1};
    CHECK(H_exact(q) == doctest::Approx(F_piecewise(OverlapQuery::make(a_of_lambda(q), 0.1))).epsilon(1e-13));
    const LambdaParam p{0.75, 0.1};
    const double a = a_of_lambda(p);
    const double phi = intersection_angle(OverlapQuery::make(a, 0.1));
    CHECK(H_exact(p) == doctest::Approx((G(a, phi_map(phi, a)) - kPi * (1.0 - a * a)) / (8.0 * kPi)).epsilon(1e-11));
  }

  TEST_CASE("coefficients vanish where the prefactors do") {
    for (double lam : {0.0, 0.5}) {
      const auto c = inner_coeffs(lam);
      CHECK(c.c_log == 0.0);
      CHECK(std::abs(c.c_quad) < 1e-17);
    }
    CHECK_THROWS_AS(outer_coeffs(0.5), DomainError);
    CHECK(coeffs({0.5 + 1e-4, 1e-3}).branch == AsymptoticBranch::Inner);
    CHECK(coeffs({0.9, 1e-3}).branch == AsymptoticBranch::Outer);
  }

  TEST_CASE("outer leading coefficient by Richardson extrapolation") {
    const double lam = 0.75;
    const double h3 = H_exact({lam, 1e-3});
    const double h4 = H_exact({lam, 1e-4});
    const double extrap = (10.0 * h4 - h3) / 9.0;
    const auto c = outer_coeffs(lam);
    const double omega = std::acos(0.5);
    const double closed = (dilog(-std::polar(1.0, 2.0 * omega)).imag() + std::sqrt(3.0) / 2.0) / (4.0 * kPi);
    CHECK(c.c0 == doctest::Approx(closed).epsilon(1e-14));
    CHECK(std::abs(c.c0 - extrap) < 1e-7);
  }

  TEST_CASE("outer first-order coefficient carries 1 - 2 log(4 lam - 2)") {
    for (double lam : {0.7, 0.9, 0.99}) {
      const auto c = outer_coeffs(lam);
      const double e = 1e-4;
      const double slope = (H_exact({lam, e}) - c.c0) / e - c.c2 * e;
      CHECK(std::abs(slope - c.c1) < 1e-6);
      const double b = 2.0 * lam - 1.0;
      const double s = std::sqrt(lam * (1.0 - lam));
      const double lg = std::log(4.0 * lam - 2.0);
      const double single_log = b * ((kPi - 2.0 * std::acos(b)) + 2.0 * b * (1.0 - lg) * s) / (4.0 * kPi);
      if (lg * s > 0.05) CHECK(std::abs(slope - single_log) > 100.0 * std::abs(slope - c.c1));
    }
  }

  TEST_CASE("H asymptotic") {
    CHECK(H_asymptotic({0.5, 0.1}) == 0.0);
    for (double lam : {0.25, 0.9}) {
      const LambdaParam p{lam, 1e-4};
      CHECK(std::abs(H_asymptotic(p) - H_exact(p)) <= 5e-2 * 1e-4);
    }
  }

  TEST_CASE("asymptotic residual decreases at least linearly") {
    const std::vector<double> eps = {1e-2, 1e-3, 1e-4};
    for (double lam : {0.1, 0.3, 0.7, 0.9}) {
      std::vector<double> err;
      for (double e : eps) err.push_back(std::abs(H_exact({lam, e}) - H_asymptotic({lam, e})));
      CAPTURE(lam);
      CHECK(fit_power_law(eps, err).slope >= 0.9);
    }
  }

  TEST_CASE("inner and outer expansions meet at the split") {
    for (double e : {1e-2, 1e-3, 1e-4}) {
      const double ls = lambda_split(e);
      const auto ci = inner_coeffs(ls);
      const auto co = outer_coeffs(ls);
      const double inner = ci.c_log * e * e * std::log(e * e) + ci.c_quad * e * e;
      const double outer = co.c0 + co.c1 * e + co.c2 * e * e;
      CHECK(std::abs(inner - outer) <= 10.0 * e);
    }
  }

  TEST_CASE("cubic expansion at a = 1") {
    CHECK(F_at_unit_asymptotic(1e-3) < 0.0);
    const double e = 1e-3;
    CHECK(std::abs(F_at_unit_asymptotic(e) - F_piecewise(OverlapQuery::make(1.0, e))) < 0.1 * std::pow(e, 5.0) * std::abs(std::log(e)));
    CHECK_THROWS_AS(F_at_unit_asymptotic(0.6), DomainError);
  }

  TEST_CASE("phi expansion") {
    CHECK(phi_asymptotic({0.0, 1e-2}) == 0.0);
    CHECK(phi_asymptotic({1.0, 1e-2}) == doctest::Approx(kPi));
    const double mid = phi_asymptotic({0.5, 1e-3});
    CHECK(mid == doctest::Approx(kPi / 2.0 + 5e-4).epsilon(1e-15));
    CHECK(std::abs(mid - intersection_angle(OverlapQuery::make(1.0, 1e-3))) <= 1e-8);
  }

  TEST_CASE("stable evaluator") {
    const auto nested = OverlapQuery::make(0.5, 1e-8);
    CHECK(E_stable(nested) == 0.25 * 1e-16 * (std::log(1e-16) - 1.0));
    const auto unit = OverlapQuery::make(1.0, 1e-10);
    const double v = E_stable(unit);
    CHECK(std::isfinite(v));
    CHECK(v < 0.0);
    CHECK(std::abs(v) <= 0.25 * 1e-20 * (1.0 - std::log(1e-20)));
    for (double a : {0.95, 1.0, 1.05, 1.099}) {
      const auto q = OverlapQuery::make(a, 0.1);
      CHECK(E_stable(q) == E(q));
    }
    const double e6 = 1e-6;
    const auto q6 = OverlapQuery::make(1.0 - e6 / 2.0, e6);
    CHECK(E_stable(q6) == E_asymptotic(q6));
    CHECK(E_stable(q6, {1e-7}) == E(q6));
  }

  TEST_CASE("asymptotic E tracks the exact one") {
    for (double e : {1e-3, 1e-4}) {
      const double scale = e * e * std::abs(std::log(e * e));
      for (int k = 0; k <= 100; ++k) {
        const auto q = OverlapQuery::make(a_of_lambda({k / 100.0, e}), e);
        CHECK(std::abs(E_asymptotic(q) - E(q)) / scale <= 0.1 * e);
      }
    }
  }

  TEST_CASE("scaled profile and asymmetry index") {
    const auto d = diagnostics_J_eta(1.0 / 1024.0, 201);
    REQUIRE(d.J.size() == 201);
    CHECK(std::abs(d.J.front()) < 1e-9);
    CHECK(std::abs(d.J.back()) < 1e-9);
    CHECK(d.eta > 0.0);
    CHECK(d.eta == doctest::Approx(0.02 / 1024.0).epsilon(0.5));
    const auto fine = diagnostics_J_eta(1e-4, 2001);
    CHECK(fine.J[1000] <= fine.J[999]);
    CHECK(fine.J[1000] <= fine.J[1001]);
    CHECK_THROWS_AS(diagnostics_J_eta(1e-3, 2), DomainError);
  }
}
