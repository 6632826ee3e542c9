#include <doctest.h>

#include <cmath>

#include "discpot/oracle.hpp"
#include "discpot/potential.hpp"

using namespace discpot;

TEST_SUITE("oracle") {
  TEST_CASE("adaptive rule on smooth and singular integrands") {
    const QuadResult poly = integrate_adaptive([](double x) { return x * x * x; }, 0.0, 2.0, 1e-13);
    CHECK(poly.value == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(poly.subdivisions == 1);
    const QuadResult lg = integrate_adaptive([](double x) { return x > 0.0 ? std::log(x) : 0.0; }, 0.0, 1.0, 1e-12);
    CHECK(lg.converged);
    CHECK(std::abs(lg.value + 1.0) < 1e-12);
    const QuadResult sq = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-13);
    CHECK(std::abs(sq.value - 2.0 / 3.0) < 1e-13);
    const QuadResult empty = integrate_adaptive([](double) { return 1.0; }, 1.0, 1.0, 1e-13);
    CHECK(empty.value == 0.0);
    CHECK(empty.subdivisions >= 1);
  }

  TEST_CASE("budget exhaustion is flagged") {
    const QuadResult r = integrate_adaptive([](double x) { return std::sin(1.0 / (x + 1e-6)); }, 0.0, 1.0, 1e-13, 20);
    CHECK_FALSE(r.converged);
    CHECK(r.err_estimate > 0.0);
  }

  TEST_CASE("halving the tolerance never loosens the estimate") {
    const auto q = OverlapQuery::make(1.02, 0.2);
    double prev = INFINITY;
    for (double tol = 1e-6; tol >= 1e-12; tol *= 0.5) {
      const QuadResult r = quad_F(q, tol);
      CHECK(r.err_estimate <= prev);
      CHECK(r.err_estimate <= tol);
      prev = r.err_estimate;
    }
  }

  TEST_CASE("quad_F") {
    CHECK(quad_F(OverlapQuery::make(0.875, 0.125), 1e-12).value == 0.0);
    const auto q = OverlapQuery::make(0.95, 0.1);
    const QuadResult r = quad_F(q, 1e-12);
    CHECK(r.converged);
    CHECK(std::abs(r.value - F_piecewise(q)) < 1e-10);
    const auto u = OverlapQuery::make(1.0, 0.2);
    CHECK(std::abs(quad_F(u, 1e-12).value - F_piecewise(u)) < 1e-12);
    CHECK_THROWS_AS(quad_F(q, 1e-14), DomainError);
  }

  TEST_CASE("quad_F is continuous across the change of Theta") {
    const double eps = 0.1;
    const double t = outer_split(eps);
    const double below = quad_F(OverlapQuery::make(t - 1e-12, eps), 1e-13).value;
    const double above = quad_F(OverlapQuery::make(t + 1e-12, eps), 1e-13).value;
    CHECK(std::abs(below - above) < 1e-10);
    CHECK(std::abs(above - F_piecewise(OverlapQuery::make(t + 1e-12, eps))) < 1e-12);
  }

  TEST_CASE("quad_F_region matches the region closed form") {
    for (double eps : {0.5, 0.1}) {
      for (int k = 0; k <= 20; ++k) {
        const auto q = OverlapQuery::make(1.0 - eps + 2.0 * eps * k / 20.0, eps);
        CHECK(std::abs(quad_F_region(q, 1e-12).value - F_region(q)) < 1e-11);
      }
    }
  }

  TEST_CASE("quad_E") {
    const auto nested = OverlapQuery::make(0.2, 0.5);
    CHECK(quad_E(nested, 1e-12).value == 0.25 * 0.25 * (std::log(0.25) - 1.0));
    const auto far = OverlapQuery::make(1.4, 0.5);
    CHECK(std::abs(quad_E(far, 1e-12).value - E(far)) < 1e-10);
    CHECK(std::abs(quad_E(far, 1e-12).value - -0.004190358975730113889257286) < 1e-12);
    CHECK(quad_E(OverlapQuery::make(1.6, 0.5), 1e-12).value == 0.0);
  }

  TEST_CASE("polar double integral agrees with the sector decomposition") {
    for (const auto& c : {std::pair{0.7, 0.4}, {1.0, 0.1}, {1.05, 0.5}, {1.2, 0.3}, {1.45, 0.5}}) {
      const double a = c.first;
      const double eps = c.second;
      const auto q = OverlapQuery::make(a, eps);
      const QuadResult two = quad_E_polar2d(q, 1e-10);
      CAPTURE(a);
      CHECK(two.converged);
      CHECK(std::abs(two.value - quad_E(q, 1e-12).value) < 1e-8);
      CHECK(std::abs(two.value) <= 0.25 * eps * eps * (1.0 - std::log(eps * eps)) + 1e-14);
    }
  }

  TEST_CASE("quad_h2") {
    CHECK(quad_h2(0.5, 0.0, 1e-12).value == 0.0);
    CHECK(std::abs(quad_h2(0.9, 2.0, 1e-12).value - h2(0.9, 2.0)) < 1e-10);
    const QuadResult edge = quad_h2(1.0, 1.0, 1e-12);
    CHECK(std::isfinite(edge.value));
    CHECK(std::abs(edge.value - h2(1.0, 1.0)) < 1e-10);
    CHECK_THROWS_AS(quad_h2(1.5, 1.0, 1e-12), DomainError);
  }
}
