#include "dualbern/approx.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dualbern/dual.hpp"
#include "dualbern/poly.hpp"
#include "dualbern/quadrature.hpp"

namespace dualbern {

namespace {

std::vector<double> integrals_with_rule(const Integrand& f, int n, const QuadRule& rule) {
  std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t r = 0; r < rule.nodes.size(); ++r) {
    const double x = rule.nodes[r];
    const double fx = f(x);
    if (!std::isfinite(fx)) throw std::domain_error("dual_integrals: integrand is not finite at a node");
    const DualTable t = eval_all_recurrence(n, rule.params, x);
    const double wf = rule.weights[r] * fx;
    for (int k = 0; k <= n; ++k) out[k] += wf * t.values[k];
  }
  return out;
}

double squared_error(const Integrand& f, std::span<const double> coeffs, const QuadRule& rule) {
  return integrate_fn(
      [&](double x) {
        const double e = f(x) - de_casteljau(coeffs, x);
        return e * e;
      },
      rule);
}

}  // namespace

std::vector<double> dual_integrals(const Integrand& f, int n, const WeightParams& p, int m) {
  if (n < 0) throw std::invalid_argument("dual_integrals: n must be nonnegative");
  return integrals_with_rule(f, n, gauss_jacobi_rule(m, p));
}

LsqResult lsq_bezier(const Integrand& f, int n, const WeightParams& p, int m) {
  if (n < 0) throw std::invalid_argument("lsq_bezier: n must be nonnegative");
  if (m < n + 1) throw std::invalid_argument("lsq_bezier: need at least n+1 quadrature nodes");
  const QuadRule rule = gauss_jacobi_rule(m, p);
  LsqResult res{n, p, integrals_with_rule(f, n, rule), 0.0, m};
  res.l2_error = squared_error(f, res.coeffs, rule);
  return res;
}

double lsq_error_reference(const Integrand& f, std::span<const double> coeffs, int n, const WeightParams& p, int m) {
  if (coeffs.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("lsq_error_reference: need n+1 coefficients");
  return squared_error(f, coeffs, gauss_jacobi_rule(m, p));
}

std::optional<Integrand> builtin_integrand(std::string_view name, std::span<const double> poly_coeffs) {
  if (name == "const1") return Integrand([](double) { return 1.0; });
  if (name == "x") return Integrand([](double x) { return x; });
  if (name == "x2") return Integrand([](double x) { return x * x; });
  if (name == "exp") return Integrand([](double x) { return std::exp(x); });
  if (name == "sin_pi") return Integrand([](double x) { return std::sin(std::numbers::pi * x); });
  if (name == "smooth_step") return Integrand([](double x) { return 0.5 * (1.0 + std::tanh(20.0 * (x - 0.5))); });
  if (name == "poly") {
    if (poly_coeffs.empty()) return std::nullopt;
    Poly q(Basis::MonomialX, std::vector<double>(poly_coeffs.begin(), poly_coeffs.end()));
    return Integrand([q](double x) { return poly_eval(q, x); });
  }
  return std::nullopt;
}

std::vector<std::string> builtin_integrand_names() {
  return {"const1", "x", "x2", "exp", "sin_pi", "smooth_step", "poly"};
}

}  // namespace dualbern
