#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "dualbern/quadrature.hpp"
#include "oracles/reference_values.hpp"

using namespace dualbern;

namespace {

const WeightParams kFlat{0.0, 0.0};
const WeightParams kCheb{-0.5, -0.5};
const WeightParams kSkew{-0.33, 5.66};
const WeightParams kParams[] = {kFlat, kCheb, kSkew};

Poly monomial(int k) {
  std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
  c.back() = 1.0;
  return Poly(Basis::MonomialX, std::move(c));
}

}  // namespace

TEST_CASE("integrate_poly_exact examples") {
  CHECK(integrate_poly_exact(Poly::constant(Basis::MonomialX, 1.0), kFlat) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(integrate_poly_exact(Poly(Basis::MonomialX, {0.0, 1.0}), kFlat) == doctest::Approx(0.5).epsilon(1e-15));
  // (B^2_1)^2 = 4x^2(1-x)^2 = 4x^2 - 8x^3 + 4x^4.
  CHECK(integrate_poly_exact(Poly(Basis::MonomialX, {0.0, 0.0, 4.0, -8.0, 4.0}), kFlat) ==
        doctest::Approx(2.0 / 15).epsilon(1e-14));
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(integrate_poly_exact(Poly::constant(Basis::ShiftedPower, 1.0), kParams[k]) ==
          doctest::Approx(oracle::kBigK[k]).epsilon(1e-13));
}

TEST_CASE("integrate_poly_exact is basis independent") {
  for (const auto& p : kParams)
    for (int k = 0; k <= 15; ++k) {
      // (1-x)^k in both bases.
      std::vector<double> s(static_cast<std::size_t>(k) + 1, 0.0);
      s.back() = 1.0;
      const Poly sp(Basis::ShiftedPower, s);
      const double a = integrate_poly_exact(sp, p);
      const double b = integrate_poly_exact(to_monomial(sp), p);
      CHECK(a == doctest::Approx(b).epsilon(1e-12));
      CHECK(a == doctest::Approx(beta_fn(p.beta() + 1, p.alpha() + k + 1)).epsilon(1e-13));
    }
}

TEST_CASE("gauss_jacobi_rule examples") {
  const QuadRule r1 = gauss_jacobi_rule(1, kFlat);
  REQUIRE(r1.nodes.size() == 1);
  CHECK(r1.nodes[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r1.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  for (std::size_t k = 0; k < 3; ++k) {
    const WeightParams& p = kParams[k];
    const QuadRule r = gauss_jacobi_rule(1, p);
    CHECK(r.nodes[0] == doctest::Approx((p.beta() + 1) / (p.sigma() + 1)).epsilon(1e-14));
    CHECK(r.weights[0] == doctest::Approx(oracle::kBigK[k]).epsilon(1e-14));
  }
  const QuadRule r6 = gauss_jacobi_rule(6, kFlat);
  for (int k = 0; k <= 11; ++k)
    CHECK(integrate_fn([k](double x) { return std::pow(x, k); }, r6) == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
  CHECK_THROWS_AS(gauss_jacobi_rule(0, kFlat), std::invalid_argument);
}

TEST_CASE("rules match scipy's Gauss-Jacobi nodes and weights") {
  const std::span<const double> nodes[] = {oracle::kGaussNodes_m7_flat, oracle::kGaussNodes_m7_cheb,
                                           oracle::kGaussNodes_m7_skew};
  const std::span<const double> weights[] = {oracle::kGaussWeights_m7_flat, oracle::kGaussWeights_m7_cheb,
                                             oracle::kGaussWeights_m7_skew};
  for (std::size_t k = 0; k < 3; ++k) {
    const QuadRule r = gauss_jacobi_rule(7, kParams[k]);
    REQUIRE(r.m == 7);
    for (int j = 0; j < 7; ++j) {
      CHECK(r.nodes[j] == doctest::Approx(nodes[k][j]).epsilon(1e-12));
      CHECK(r.weights[j] == doctest::Approx(weights[k][j]).epsilon(1e-11));
    }
  }
}

TEST_CASE("rule structure") {
  for (std::size_t k = 0; k < 3; ++k)
    for (int m = 1; m <= 30; ++m) {
      const QuadRule r = gauss_jacobi_rule(m, kParams[k]);
      REQUIRE(r.nodes.size() == static_cast<std::size_t>(m));
      REQUIRE(r.weights.size() == static_cast<std::size_t>(m));
      double mass = 0.0;
      for (int j = 0; j < m; ++j) {
        CHECK(r.nodes[j] > 0.0);
        CHECK(r.nodes[j] < 1.0);
        if (j > 0) CHECK(r.nodes[j - 1] < r.nodes[j]);
        CHECK(r.weights[j] > 0.0);
        mass += r.weights[j];
      }
      CHECK(mass == doctest::Approx(oracle::kBigK[k]).epsilon(1e-12));
    }
}

TEST_CASE("nodes of consecutive rules interlace") {
  for (const auto& p : kParams)
    for (int m = 1; m < 30; ++m) {
      const QuadRule a = gauss_jacobi_rule(m, p);
      const QuadRule b = gauss_jacobi_rule(m + 1, p);
      for (int j = 0; j < m; ++j) {
        CHECK(b.nodes[j] < a.nodes[j]);
        CHECK(a.nodes[j] < b.nodes[j + 1]);
      }
    }
}

TEST_CASE("exactness up to degree 2m-1, m <= 30") {
  double worst = 0.0;
  for (const auto& p : kParams)
    for (int m = 1; m <= 30; ++m) {
      const QuadRule r = gauss_jacobi_rule(m, p);
      for (int k = 0; k <= 2 * m - 1; ++k) {
        const double exact = integrate_poly_exact(monomial(k), p);
        const double got = integrate_fn([k](double x) { return std::pow(x, k); }, r);
        worst = std::max(worst, std::abs(got - exact) / std::abs(exact));
      }
    }
  CHECK(worst <= 1e-12);
}

TEST_CASE("integrate_fn") {
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(integrate_fn([](double) { return 1.0; }, gauss_jacobi_rule(5, kParams[k])) ==
          doctest::Approx(oracle::kBigK[k]).epsilon(1e-13));
  for (int m = 1; m <= 4; ++m)
    CHECK(integrate_fn([](double x) { return x; }, gauss_jacobi_rule(m, kFlat)) == doctest::Approx(0.5).epsilon(1e-15));

  std::vector<double> taylor(21);
  taylor[0] = 1.0;
  for (int k = 1; k <= 20; ++k) taylor[k] = taylor[k - 1] / k;
  const double ref = integrate_poly_exact(Poly(Basis::MonomialX, taylor), kFlat);
  CHECK(std::abs(integrate_fn([](double x) { return std::exp(x); }, gauss_jacobi_rule(12, kFlat)) - ref) <= 1e-10);

  CHECK_THROWS(integrate_fn([](double) { return NAN; }, gauss_jacobi_rule(3, kFlat)));
  CHECK_THROWS(integrate_fn([](double) { return INFINITY; }, gauss_jacobi_rule(3, kFlat)));
}
