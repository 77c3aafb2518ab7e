#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dualbern/poly.hpp"
#include "dualbern/quadrature.hpp"
#include "dualbern/relations.hpp"
#include "dualbern/specfun.hpp"
#include "oracles/reference_values.hpp"

using namespace dualbern;

namespace {

const WeightParams kParamSets[] = {{0.0, 0.0}, {-0.5, -0.5}, {-0.33, 5.66}};

bool close_rel(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("WeightParams derives sigma and K") {
  const WeightParams flat(0.0, 0.0);
  CHECK(flat.sigma() == 1.0);
  CHECK(flat.bigK() == doctest::Approx(1.0).epsilon(1e-15));

  const WeightParams cheb(-0.5, -0.5);
  CHECK(cheb.sigma() == 0.0);
  CHECK(cheb.bigK() == doctest::Approx(std::numbers::pi).epsilon(1e-14));

  for (int s = 0; s < 3; ++s) {
    CHECK(kParamSets[s].bigK() > 0.0);
    CHECK(close_rel(kParamSets[s].bigK(), oracle::kBigK[s], 1e-13));
    CHECK(kParamSets[s].sigma() == kParamSets[s].alpha() + kParamSets[s].beta() + 1.0);
  }

  const WeightParams sw = WeightParams(-0.33, 5.66).swapped();
  CHECK(sw.alpha() == 5.66);
  CHECK(sw.beta() == -0.33);
  CHECK(sw.bigK() == doctest::Approx(WeightParams(-0.33, 5.66).bigK()).epsilon(1e-14));
}

TEST_CASE("WeightParams rejects alpha or beta at or below -1") {
  CHECK_THROWS_AS(WeightParams(-1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(WeightParams(0.0, -1.5), std::domain_error);
  CHECK_THROWS_AS(WeightParams(NAN, 0.0), std::domain_error);
  CHECK_THROWS_AS(WeightParams(0.0, INFINITY), std::domain_error);
  CHECK_NOTHROW(WeightParams(-0.999, -0.999));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(5.5, 0) == 1.0);
  CHECK(pochhammer(3.0, 2) == 12.0);
  CHECK(pochhammer(-2.0, 4) == 0.0);
  CHECK(pochhammer(1.0, 10) == 3628800.0);
  CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
}

TEST_CASE("pochhammer_ratio matches separate products") {
  const double want = pochhammer(2.5, 7) / (pochhammer(1.25, 9) * pochhammer(0.75, 4));
  CHECK(pochhammer_ratio(2.5, 7, 1.25, 9, 0.75, 4) == doctest::Approx(want).epsilon(1e-14));
  CHECK(pochhammer_ratio(3.0, 0, 4.0, 0) == 1.0);
}

TEST_CASE("log_gamma exact points and reference values") {
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(2.0) == 0.0);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429).epsilon(1e-10));
  for (std::size_t k = 0; k < std::size(oracle::kLogGammaX); ++k) {
    INFO("x = " << oracle::kLogGammaX[k]);
    CHECK(close_rel(log_gamma(oracle::kLogGammaX[k]), oracle::kLogGamma[k], 1e-13));
  }
}

TEST_CASE("log_gamma agrees with std::lgamma over (0, 200]") {
  double worst = 0.0;
  for (int k = 1; k <= 4000; ++k) {
    const double x = 0.05 * k;
    const double want = std::lgamma(x);
    worst = std::max(worst, std::abs(log_gamma(x) - want) / std::max(1.0, std::abs(want)));
  }
  CHECK(worst <= 1e-13);
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("beta_fn") {
  CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(beta_fn(2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(beta_fn(1.5, 2.5) == doctest::Approx(std::numbers::pi / 16).epsilon(1e-14));
  for (std::size_t k = 0; k < std::size(oracle::kBeta); ++k)
    CHECK(close_rel(beta_fn(oracle::kBetaA[k], oracle::kBetaB[k]), oracle::kBeta[k], 1e-12));
  CHECK_THROWS_AS(beta_fn(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(beta_fn(1.0, -0.5), std::domain_error);
}

TEST_CASE("hyp_terminating") {
  SUBCASE("zero upper parameter leaves only the first term") {
    CHECK(hyp_terminating(HypSpec<double>{{-0.0, 3.0}, {1.5}, 0.7}) == 1.0);
  }
  SUBCASE("two-term sum") { CHECK(hyp_terminating(HypSpec<double>{{-1.0, 2.0}, {1.0}, 1.0}) == -1.0); }
  SUBCASE("argument zero") {
    const double k = 4, sigma = 1.7, alpha = 0.3;
    CHECK(hyp_terminating(HypSpec<double>{{-k, k + sigma + 1}, {alpha + 1}, 0.0}) == 1.0);
  }
  SUBCASE("Chu-Vandermonde 2F1(-n, b; c; 1) = (c-b)_n / (c)_n") {
    const int n = 6;
    const double b = 2.25, c = 4.5;
    const double want = pochhammer(c - b, n) / pochhammer(c, n);
    CHECK(hyp_terminating(HypSpec<double>{{double(-n), b}, {c}, 1.0}) == doctest::Approx(want).epsilon(1e-13));
  }
  SUBCASE("terminating index uses the smallest nonpositive integer") {
    CHECK(hyp_terminating_index(std::vector<double>{-3.0, -5.0, 0.5}) == 3);
    CHECK(hyp_terminating_index(std::vector<double>{0.5, 2.0}) < 0);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(hyp_terminating(HypSpec<double>{{0.5, 2.0}, {1.0}, 0.5}), std::domain_error);
    CHECK_THROWS_AS(hyp_terminating(HypSpec<double>{{-3.0}, {-1.0}, 1.0}), std::domain_error);
    // The lower parameter -4 stays nonzero through the three terms that exist.
    CHECK_NOTHROW(hyp_terminating(HypSpec<double>{{-2.0}, {-4.0}, 1.0}));
  }
}

TEST_CASE("jacobi_R examples") {
  CHECK(jacobi_R(0, WeightParams(1.3, 2.2), 0.123) == 1.0);
  CHECK(jacobi_R(1, WeightParams(0.0, 0.0), 0.75) == doctest::Approx(0.5));
  for (const auto& p : kParamSets) CHECK(jacobi_R(1, p, 1.0) == doctest::Approx(p.alpha() + 1.0));
}

TEST_CASE("jacobi_R against reference values") {
  for (std::size_t k = 0; k < std::size(oracle::kJacobi); ++k) {
    const int deg = static_cast<int>(oracle::kJacobiK[k]);
    const double got = jacobi_R<double>(deg, oracle::kJacobiA[k], oracle::kJacobiB[k], oracle::kJacobiX[k]);
    INFO("k = " << deg);
    CHECK(close_rel(got, oracle::kJacobi[k], 1e-12));
  }
}

TEST_CASE("jacobi_R recurrence and hypergeometric forms agree for small k") {
  for (const auto& p : kParamSets)
    for (int k = 0; k <= 10; ++k)
      for (int j = 0; j <= 20; ++j) {
        const double x = j / 20.0;
        const double a = jacobi_R<double>(k, p.alpha(), p.beta(), x);
        const double b = jacobi_R_hypergeometric<double>(k, p.alpha(), p.beta(), x);
        CHECK(close_rel(a, b, 1e-10));
      }
}

TEST_CASE("jacobi_R_poly evaluates like jacobi_R") {
  for (const auto& p : kParamSets)
    for (int k = 0; k <= 12; ++k) {
      const Poly r = jacobi_R_poly(k, p.alpha(), p.beta());
      CHECK(r.degree() == k);
      for (double x : {0.0, 0.3, 0.5, 0.8, 1.0})
        CHECK(close_rel(poly_eval(r, x), jacobi_R(k, p, x), 1e-9));
    }
}

TEST_CASE("Jacobi symmetry on the 101-point grid") {
  double worst = 0.0;
  for (const auto& p : kParamSets)
    for (int k = 0; k <= 12; ++k)
      for (int j = 0; j <= 100; ++j) {
        const double x = j / 100.0;
        const double y = (100 - j) / 100.0;
        const double lhs = jacobi_R(k, p, x);
        const double rhs = (k % 2 ? -1.0 : 1.0) * jacobi_R(k, p.swapped(), y);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
  CHECK(worst <= 1e-11);
}

TEST_CASE("Jacobi orthogonality by exact Beta moments") {
  // The power-basis sum for R_8^2 has a condition number near 1.5e11 at
  // alpha = beta = -1/2, beyond what long double absorbs, so this runs in
  // 50-digit arithmetic.
  using Ext = boost::multiprecision::cpp_bin_float_50;
  for (const auto& p : kParamSets)
    for (int k = 0; k <= 8; ++k)
      for (int l = 0; l <= 8; ++l) {
        const auto rk = jacobi_R_coeffs<Ext>(k, p.alpha(), p.beta());
        const auto rl = jacobi_R_coeffs<Ext>(l, p.alpha(), p.beta());
        std::vector<Ext> prod(rk.size() + rl.size() - 1, Ext(0));
        for (std::size_t a = 0; a < rk.size(); ++a)
          for (std::size_t b = 0; b < rl.size(); ++b) prod[a + b] += rk[a] * rl[b];
        const double got =
            static_cast<double>(integrate_power_exact<Ext>(std::span<const Ext>(prod), Basis::ShiftedPower, p));
        const double h = jacobi_norm_h(k, p);
        INFO("k = " << k << ", l = " << l);
        CHECK(std::abs(got - (k == l ? h : 0.0)) <= 1e-9 * h);
      }
}

TEST_CASE("Jacobi orthogonality in binary64 stays within the cancellation bound") {
  for (const auto& p : kParamSets)
    for (int k = 0; k <= 8; ++k) {
      const Poly prod = poly_mul(jacobi_R_poly(k, p.alpha(), p.beta()), jacobi_R_poly(k, p.alpha(), p.beta()));
      CHECK(integrate_poly_exact(prod, p) == doctest::Approx(jacobi_norm_h(k, p)).epsilon(1e-7));
    }
}

TEST_CASE("Jacobi differential equation residual") {
  for (const auto& p : kParamSets)
    for (int k = 0; k <= 12; ++k) {
      const Poly res = jacobi_ode_residual(k, p);
      const double scale = jacobi_R_poly(k, p.alpha(), p.beta()).max_abs_coeff();
      INFO("k = " << k);
      CHECK(res.max_abs_coeff() <= 1e-10 * scale);
    }
}

TEST_CASE("jacobi_norm_h") {
  CHECK(jacobi_norm_h(0, WeightParams(0.0, 0.0)) == doctest::Approx(1.0));
  CHECK(jacobi_norm_h(1, WeightParams(0.0, 0.0)) == doctest::Approx(1.0 / 3.0));
  CHECK(jacobi_norm_h(0, WeightParams(-0.5, -0.5)) == doctest::Approx(std::numbers::pi));
  // sigma = 0 stays finite.
  CHECK(std::isfinite(jacobi_norm_h(3, WeightParams(-0.5, -0.5))));
  CHECK(jacobi_sigma_factor(0, 0.0) == 1.0);
  CHECK(jacobi_sigma_factor(2, 1.0) == doctest::Approx(5.0 * 2.0));
}

TEST_CASE("hahn_Q examples") {
  const WeightParams p(0.7, 1.1);
  for (int i = 0; i <= 5; ++i) CHECK(hahn_Q(0, i, p, 5) == 1.0);
  CHECK(hahn_Q(2, 0, p, 5) == 1.0);
  CHECK(hahn_Q(1, 1, WeightParams(0.0, 0.0), 2) == doctest::Approx(0.0));
  CHECK_THROWS_AS(hahn_Q(6, 1, p, 5), std::domain_error);
}

TEST_CASE("hahn_Q against reference values") {
  for (std::size_t k = 0; k < std::size(oracle::kHahn); ++k) {
    const double got = hahn_Q<double>(static_cast<int>(oracle::kHahnK[k]), static_cast<int>(oracle::kHahnI[k]),
                                      oracle::kHahnA[k], oracle::kHahnB[k], static_cast<int>(oracle::kHahnN[k]));
    CHECK(close_rel(got, oracle::kHahn[k], 1e-12));
  }
}

TEST_CASE("hahn_Q at i = N matches brute-force summation") {
  const double* exact[] = {oracle::kHahnAtN_N12_flat, oracle::kHahnAtN_N12_cheb, oracle::kHahnAtN_N12_skew};
  for (int s = 0; s < 3; ++s)
    for (int k = 0; k <= 12; ++k) {
      INFO("set " << s << ", k = " << k);
      CHECK(close_rel(hahn_Q(k, 12, kParamSets[s], 12), exact[s][k], 1e-12));
    }
}

TEST_CASE("hahn_Q at i = N reduces to a Chu-Vandermonde ratio") {
  // 3F2(-k, k+a+b+1, -N; a+1, -N; 1) = 2F1(-k, k+a+b+1; a+1; 1) = (-1)^k (b+1)_k / (a+1)_k
  for (const auto& p : kParamSets)
    for (int big_n = 1; big_n <= 12; ++big_n)
      for (int k = 0; k <= big_n; ++k) {
        const double want = (k % 2 ? -1.0 : 1.0) * pochhammer(p.beta() + 1.0, k) / pochhammer(p.alpha() + 1.0, k);
        CHECK(close_rel(hahn_Q(k, big_n, p, big_n), want, 1e-12));
      }
}

TEST_CASE("Hahn difference equation") {
  double worst = 0.0;
  for (const auto& p : kParamSets)
    for (int big_n = 0; big_n <= 12; ++big_n)
      for (int k = 0; k <= big_n; ++k)
        for (int i = 0; i <= big_n; ++i) worst = std::max(worst, std::abs(residual_hahn_equation(k, i, p, big_n)));
  CHECK(worst <= 1e-10);
}

TEST_CASE("lambda_eig") {
  CHECK(lambda_eig(0, WeightParams(0.0, 0.0)) == 0.0);
  CHECK(lambda_eig(1, WeightParams(0.0, 0.0)) == 2.0);
  CHECK(lambda_eig(3, WeightParams(1.0, 2.0)) == 21.0);
}

TEST_CASE("long double instantiation") {
  for (std::size_t k = 0; k < std::size(oracle::kJacobi); ++k) {
    const long double got = jacobi_R<long double>(static_cast<int>(oracle::kJacobiK[k]), oracle::kJacobiA[k],
                                                  oracle::kJacobiB[k], oracle::kJacobiX[k]);
    CHECK(close_rel(static_cast<double>(got), oracle::kJacobi[k], 1e-14));
  }
  CHECK(pochhammer<long double>(0.5L, 3) == 0.5L * 1.5L * 2.5L);
  CHECK(hyp_terminating(HypSpec<long double>{{-1.0L, 2.0L}, {1.0L}, 1.0L}) == -1.0L);
  CHECK(static_cast<double>(hahn_Q<long double>(1, 1, 0.0L, 0.0L, 2)) == doctest::Approx(0.0));
}
