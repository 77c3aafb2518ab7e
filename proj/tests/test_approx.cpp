#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "dualbern/approx.hpp"
#include "dualbern/poly.hpp"
#include "oracles/reference_values.hpp"

using namespace dualbern;

namespace {

const WeightParams kFlat{0.0, 0.0};
const WeightParams kCheb{-0.5, -0.5};
const WeightParams kSkew{-0.33, 5.66};
const WeightParams kParams[] = {kFlat, kCheb, kSkew};

double exp_fn(double x) { return std::exp(x); }

// x^k = sum_j C(j,k)/C(n,k) B^n_j(x).
std::vector<double> bernstein_of_power(int k, int n) {
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) c[j] = binomial(j, k) / binomial(n, k);
  return c;
}

}  // namespace

TEST_CASE("dual integrals of the constant function are all one") {
  for (const auto& p : kParams)
    for (int n : {0, 1, 4, 10}) {
      const auto I = dual_integrals([](double) { return 1.0; }, n, p, default_quad_nodes(n));
      REQUIRE(I.size() == static_cast<std::size_t>(n) + 1);
      for (double v : I) CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("dual integrals of a Bernstein polynomial are a unit vector") {
  for (const auto& p : kParams)
    for (int n : {1, 5, 8})
      for (int j = 0; j <= n; ++j) {
        const auto I = dual_integrals([&](double x) { return bernstein_eval(n, j, x); }, n, p, default_quad_nodes(n));
        for (int k = 0; k <= n; ++k) CHECK(std::abs(I[k] - (j == k ? 1.0 : 0.0)) <= 1e-9);
      }
}

TEST_CASE("x at degree one") {
  const auto I = dual_integrals([](double x) { return x; }, 1, kFlat, 17);
  CHECK(std::abs(I[0]) <= 1e-13);
  CHECK(I[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("dual integrals of exp match high-precision values") {
  const auto a = dual_integrals(exp_fn, 4, kFlat, default_quad_nodes(4));
  for (int k = 0; k <= 4; ++k) CHECK(a[k] == doctest::Approx(oracle::kLsqExp_n4_flat[k]).epsilon(1e-11));
  const auto b = dual_integrals(exp_fn, 6, kSkew, default_quad_nodes(6));
  for (int k = 0; k <= 6; ++k) CHECK(b[k] == doctest::Approx(oracle::kLsqExp_n6_skew[k]).epsilon(1e-9));
}

TEST_CASE("lsq_bezier reproduces polynomials") {
  for (const auto& p : kParams)
    for (int n = 2; n <= 8; ++n) {
      for (int k = 0; k <= 2; ++k) {
        const LsqResult r = lsq_bezier([k](double x) { return std::pow(x, k); }, n, p, default_quad_nodes(n));
        const auto want = bernstein_of_power(k, n);
        for (int j = 0; j <= n; ++j) CHECK(std::abs(r.coeffs[j] - want[j]) <= 1e-8);
        CHECK(r.l2_error >= 0.0);
        CHECK(r.l2_error <= 1e-10);
        CHECK(r.quad_m == default_quad_nodes(n));
      }
      if (n >= 3) {
        const LsqResult cubic = lsq_bezier([](double x) { return 1.0 - 2.0 * x + 0.5 * x * x * x; }, n, p, n + 16);
        CHECK(cubic.l2_error <= 1e-10);
      }
    }
}

TEST_CASE("lsq_bezier recovers unit vectors from Bernstein inputs") {
  for (const auto& p : kParams)
    for (int k = 0; k <= 6; ++k) {
      const LsqResult r = lsq_bezier([k](double x) { return bernstein_eval(6, k, x); }, 6, p, 22);
      for (int j = 0; j <= 6; ++j) CHECK(std::abs(r.coeffs[j] - (j == k ? 1.0 : 0.0)) <= 1e-9);
      CHECK(r.l2_error <= 1e-10);
    }
}

TEST_CASE("exp errors decrease with the degree") {
  for (const auto& p : kParams) {
    double prev = INFINITY;
    for (int n : {2, 4, 6, 8}) {
      const double e = lsq_bezier(exp_fn, n, p, default_quad_nodes(n)).l2_error;
      CHECK(e < prev);
      prev = e;
    }
  }
}

TEST_CASE("lsq_error_reference") {
  const LsqResult r = lsq_bezier(exp_fn, 5, kCheb, 21);
  CHECK(lsq_error_reference(exp_fn, r.coeffs, 5, kCheb, 21) == r.l2_error);
  for (int k = 0; k <= 5; ++k)
    for (double d : {1e-3, -1e-3}) {
      auto c = r.coeffs;
      c[k] += d;
      CHECK(lsq_error_reference(exp_fn, c, 5, kCheb, 21) > r.l2_error);
    }
  CHECK(lsq_error_reference([](double) { return 0.0; }, std::vector<double>(4, 0.0), 3, kFlat, 8) == 0.0);
}

TEST_CASE("random perturbations never beat the minimizer") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g(0.0, 1e-2);
  auto sine = [](double x) { return std::sin(3.0 * x) + x; };
  for (const auto& p : kParams)
    for (int n = 1; n <= 8; ++n) {
      const LsqResult r = lsq_bezier(sine, n, p, default_quad_nodes(n));
      for (int trial = 0; trial < 20; ++trial) {
        auto c = r.coeffs;
        for (double& v : c) v += g(rng);
        CHECK(lsq_error_reference(sine, c, n, p, default_quad_nodes(n)) >= r.l2_error - 1e-12);
      }
    }
}

TEST_CASE("doubling the node count leaves the integrals unchanged") {
  for (const auto& p : kParams)
    for (int n = 0; n <= 10; ++n) {
      const auto a = dual_integrals(exp_fn, n, p, default_quad_nodes(n));
      const auto b = dual_integrals(exp_fn, n, p, 2 * default_quad_nodes(n));
      for (int k = 0; k <= n; ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-9);
    }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(lsq_bezier(exp_fn, 5, kFlat, 5), std::invalid_argument);
  CHECK_NOTHROW(lsq_bezier(exp_fn, 5, kFlat, 6));
}

TEST_CASE("builtin integrands") {
  const auto names = builtin_integrand_names();
  for (const char* want : {"const1", "x", "x2", "exp", "sin_pi", "smooth_step", "poly"})
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
  CHECK_FALSE(builtin_integrand("nope").has_value());
  CHECK((*builtin_integrand("const1"))(0.3) == 1.0);
  CHECK((*builtin_integrand("x2"))(0.5) == 0.25);
  CHECK((*builtin_integrand("exp"))(1.0) == doctest::Approx(std::exp(1.0)));
  CHECK((*builtin_integrand("sin_pi"))(0.5) == doctest::Approx(1.0));
  const std::vector<double> c = {1.0, 0.0, 2.0};
  CHECK((*builtin_integrand("poly", c))(0.5) == doctest::Approx(1.5));
  for (const auto& name : names) {
    const auto f = builtin_integrand(name, c);
    REQUIRE(f.has_value());
    for (double x : {0.0, 0.5, 1.0}) CHECK(std::isfinite((*f)(x)));
  }
}
