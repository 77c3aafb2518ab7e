#pragma once

// Weighted least-squares approximation in Bernstein-Bezier form. The
// Bernstein coefficients of the best approximation p*_n of f are the
// integrals I_k = <f, D^n_k>, computed with one Gauss-Jacobi rule and one
// O(n) dual-table evaluation per node.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualbern/specfun.hpp"

namespace dualbern {

using Integrand = std::function<double(double)>;

struct LsqResult {
  int n = 0;
  WeightParams params{0.0, 0.0};
  std::vector<double> coeffs;  ///< I_0..I_n
  double l2_error = 0.0;       ///< int (1-x)^alpha x^beta (f - p*_n)^2
  int quad_m = 0;
};

/// Default node count for a degree-n problem.
inline int default_quad_nodes(int n) { return n + 16; }

/// I_k = int (1-x)^alpha x^beta f(x) D^n_k(x) dx, k = 0..n, with an m-node rule.
std::vector<double> dual_integrals(const Integrand& f, int n, const WeightParams& p, int m);

/// Requires m >= n+1 (std::invalid_argument otherwise).
LsqResult lsq_bezier(const Integrand& f, int n, const WeightParams& p, int m);

/// Weighted squared error of an arbitrary Bernstein coefficient vector.
double lsq_error_reference(const Integrand& f, std::span<const double> coeffs, int n, const WeightParams& p, int m);

/// Built-in test functions: const1, x, x2, exp, sin_pi, smooth_step, and
/// poly (monomial coefficients in `poly_coeffs`).
std::optional<Integrand> builtin_integrand(std::string_view name, std::span<const double> poly_coeffs = {});

std::vector<std::string> builtin_integrand_names();

}  // namespace dualbern
