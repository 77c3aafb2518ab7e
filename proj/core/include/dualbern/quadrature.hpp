#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "dualbern/poly.hpp"
#include "dualbern/specfun.hpp"

namespace dualbern {

/// Gauss-Jacobi rule on [0,1] for the weight (1-x)^alpha x^beta.
struct QuadRule {
  int m = 0;
  std::vector<double> nodes;    ///< strictly increasing, inside (0,1)
  std::vector<double> weights;  ///< positive, summing to K
  WeightParams params{0.0, 0.0};
};

/// int_0^1 (1-x)^alpha x^beta sum_j c_j e_j(x) dx with e_j = x^j (MonomialX)
/// or (1-x)^j (ShiftedPower). The moments come from one Beta value and the
/// ratio B(u, v+1) = B(u, v) v/(u+v), so their rounding errors are
/// correlated and do not spoil cancellation in the sum.
template <class Real>
Real integrate_power_exact(std::span<const Real> c, Basis basis, const WeightParams& params) {
  const bool mono = basis == Basis::MonomialX;
  const Real fixed = Real(mono ? params.alpha() : params.beta()) + Real(1);
  Real moving = Real(mono ? params.beta() : params.alpha()) + Real(1);
  Real moment = beta_fn(static_cast<double>(fixed), static_cast<double>(moving));
  Real s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    s += c[j] * moment;
    moment *= moving / (fixed + moving);
    moving += Real(1);
  }
  return s;
}

/// int_0^1 (1-x)^alpha x^beta p(x) dx from Beta moments, summed in long double.
double integrate_poly_exact(const Poly& p, const WeightParams& params);

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
/// monic shifted-Jacobi recurrence, weights K times the squared first
/// eigenvector components. Exact for degree <= 2m-1.
/// Throws std::invalid_argument if m < 1 and std::runtime_error if the QL
/// iteration does not converge.
QuadRule gauss_jacobi_rule(int m, const WeightParams& params);

/// sum_r w_r f(x_r); throws std::domain_error if f is not finite at a node.
double integrate_fn(const std::function<double(double)>& f, const QuadRule& rule);

}  // namespace dualbern
