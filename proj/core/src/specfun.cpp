#include "dualbern/specfun.hpp"

#include <array>
#include <numbers>
#include <string>

namespace dualbern {

WeightParams::WeightParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw std::domain_error("WeightParams: need alpha > -1 and beta > -1, got (" + std::to_string(alpha) +
                            ", " + std::to_string(beta) + ")");
  sigma_ = alpha_ + beta_ + 1.0;
  bigK_ = std::exp(log_gamma(alpha_ + 1.0) + log_gamma(beta_ + 1.0) - log_gamma(sigma_ + 1.0));
}

double pochhammer_ratio(double a, int la, double b, int lb, double c, int lc) {
  const int nd = lb + lc;
  const int steps = std::max(la, nd);
  double r = 1.0;
  for (int t = 0; t < steps; ++t) {
    if (t < la) r *= a + t;
    if (t < lb) r /= b + t;
    else if (t < nd) r /= c + (t - lb);
  }
  return r;
}

namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

double beta_fn(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta_fn: arguments must be positive");
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

Poly jacobi_R_poly(int k, double alpha, double beta) {
  return Poly(Basis::ShiftedPower, jacobi_R_coeffs<double>(k, alpha, beta));
}

double jacobi_sigma_factor(int k, double sigma) {
  if (k == 0) return 1.0;
  return (2.0 * k + sigma) * pochhammer(sigma + 1.0, k - 1);
}

double jacobi_norm_h(int k, const WeightParams& p) {
  double r = p.bigK();
  for (int j = 0; j < k; ++j) r *= (p.alpha() + 1.0 + j) * (p.beta() + 1.0 + j) / (j + 1.0);
  return r / jacobi_sigma_factor(k, p.sigma());
}

}  // namespace dualbern
