#pragma once

// Scalar special-function kernels: Pochhammer symbols, log-Gamma, Beta,
// terminating hypergeometric series, shifted Jacobi and Hahn polynomials.
//
// The series and polynomial kernels are templates over the real type so that
// check suites can run them in long double; the library itself uses double.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dualbern/poly.hpp"

namespace dualbern {

/// Jacobi weight (1-x)^alpha x^beta on [0,1], with sigma = alpha+beta+1 and
/// the total mass K = Gamma(alpha+1) Gamma(beta+1) / Gamma(sigma+1).
class WeightParams {
 public:
  /// Throws std::domain_error unless alpha > -1 and beta > -1.
  WeightParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double sigma() const noexcept { return sigma_; }
  double bigK() const noexcept { return bigK_; }

  /// (beta, alpha): the parameters seen through x -> 1-x.
  WeightParams swapped() const { return WeightParams(beta_, alpha_); }

  friend bool operator==(const WeightParams& a, const WeightParams& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  double alpha_;
  double beta_;
  double sigma_;
  double bigK_;
};

/// Rising factorial (c)_l = c (c+1) ... (c+l-1), (c)_0 = 1.
template <class Real>
Real pochhammer(Real c, int l) {
  Real r = 1;
  for (int j = 0; j < l; ++j) r *= c + Real(j);
  return r;
}

/// (a)_la / ((b)_lb (c)_lc) with numerator and denominator factors
/// interleaved, so intermediate values stay near the size of the result.
double pochhammer_ratio(double a, int la, double b, int lb, double c = 0.0, int lc = 0);

/// ln Gamma(x) for x > 0 (Lanczos approximation); throws std::domain_error otherwise.
double log_gamma(double x);

/// B(a,b) = Gamma(a) Gamma(b) / Gamma(a+b); throws std::domain_error unless a, b > 0.
double beta_fn(double a, double b);

/// Parameters of a pFq series that terminates because some upper parameter
/// is a nonpositive integer.
template <class Real>
struct HypSpec {
  std::vector<Real> upper;
  std::vector<Real> lower;
  Real argument{};
};

/// Index at which the series terminates: min{k : -k in upper}, or -1.
template <class Real>
int hyp_terminating_index(const std::vector<Real>& upper) {
  int k = -1;
  for (Real a : upper) {
    if (a <= 0 && a == std::round(a)) {
      const int ka = static_cast<int>(-a);
      k = k < 0 ? ka : std::min(k, ka);
    }
  }
  return k;
}

/// Finite sum sum_{l=0}^{k} prod (a_i)_l / prod (b_j)_l * x^l / l!, each
/// term obtained from the previous one by one multiply-divide per parameter.
///
/// Throws std::domain_error if no upper parameter terminates the series, or
/// if a lower parameter reaches zero before the series terminates.
template <class Real>
Real hyp_terminating(const HypSpec<Real>& spec) {
  const int k = hyp_terminating_index(spec.upper);
  if (k < 0) throw std::domain_error("hyp_terminating: series does not terminate");
  Real term = 1;
  Real sum = 1;
  for (int l = 0; l < k; ++l) {
    const Real rl = Real(l);
    for (Real a : spec.upper) term *= a + rl;
    for (Real b : spec.lower) {
      if (b + rl == Real(0)) throw std::domain_error("hyp_terminating: lower parameter hits zero");
      term /= b + rl;
    }
    term *= spec.argument / Real(l + 1);
    sum += term;
  }
  return sum;
}

/// Shifted Jacobi polynomial R_k^{(alpha,beta)}(x), orthogonal on [0,1] for
/// the weight (1-x)^alpha x^beta. Evaluated by the three-term recurrence of
/// P_k^{(alpha,beta)}(2x-1); O(k) and stable for x in [0,1].
template <class Real>
Real jacobi_R(int k, Real alpha, Real beta, Real x) {
  if (k == 0) return Real(1);
  const Real t = Real(2) * x - Real(1);
  const Real ab = alpha + beta;
  Real p0 = 1;
  Real p1 = (alpha + Real(1)) + (ab + Real(2)) * (t - Real(1)) / Real(2);
  for (int n = 2; n <= k; ++n) {
    const Real rn = Real(n);
    const Real c = Real(2) * rn + ab;
    const Real a1 = Real(2) * rn * (rn + ab) * (c - Real(2));
    const Real a2 = (c - Real(1)) * (c * (c - Real(2)) * t + alpha * alpha - beta * beta);
    const Real a3 = Real(2) * (rn + alpha - Real(1)) * (rn + beta - Real(1)) * c;
    // Dividing the coefficients rather than the sum keeps the division off
    // the p0 -> p1 -> p2 dependency chain.
    const Real p2 = (a2 / a1) * p1 - (a3 / a1) * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

inline double jacobi_R(int k, const WeightParams& p, double x) {
  return jacobi_R<double>(k, p.alpha(), p.beta(), x);
}

/// R_k^{(alpha,beta)}(x) from its 2F1 definition,
///   (alpha+1)_k / k! * 2F1(-k, k+alpha+beta+1; alpha+1; 1-x),
/// switching to (-1)^k R_k^{(beta,alpha)}(1-x) for x < 1/2 so the series
/// argument stays in [0, 1/2]. O(k); loses accuracy for k beyond ~15.
template <class Real>
Real jacobi_R_hypergeometric(int k, Real alpha, Real beta, Real x) {
  Real sign = 1;
  if (x < Real(0.5)) {
    std::swap(alpha, beta);
    x = Real(1) - x;
    sign = (k % 2) ? Real(-1) : Real(1);
  }
  Real pref = 1;
  for (int j = 0; j < k; ++j) pref *= (alpha + Real(1 + j)) / Real(j + 1);
  const HypSpec<Real> spec{{Real(-k), Real(k) + alpha + beta + Real(1)}, {alpha + Real(1)}, Real(1) - x};
  return sign * pref * hyp_terminating(spec);
}

/// Coefficients of R_k^{(alpha,beta)} in powers of (1-x):
///   c_l = (alpha+1)_k/k! (-k)_l (k+sigma)_l / ((alpha+1)_l l!).
template <class Real>
std::vector<Real> jacobi_R_coeffs(int k, Real alpha, Real beta) {
  std::vector<Real> c(static_cast<std::size_t>(k) + 1);
  Real term = 1;
  for (int j = 0; j < k; ++j) term *= (alpha + Real(1 + j)) / Real(j + 1);
  const Real top = Real(k) + alpha + beta + Real(1);
  c[0] = term;
  for (int l = 0; l < k; ++l) {
    term *= Real(-k + l) * (top + Real(l)) / ((alpha + Real(1 + l)) * Real(l + 1));
    c[static_cast<std::size_t>(l) + 1] = term;
  }
  return c;
}

/// R_k^{(alpha,beta)} as an exact ShiftedPower polynomial.
Poly jacobi_R_poly(int k, double alpha, double beta);

/// Squared norm h_k = <R_k, R_k>, computed with the factor
/// (2k/sigma + 1)(sigma)_k written as (2k+sigma)(sigma+1)_{k-1}.
double jacobi_norm_h(int k, const WeightParams& p);

/// (2k/sigma + 1)(sigma)_k, finite as sigma -> 0 (equals 1 at k = 0).
double jacobi_sigma_factor(int k, double sigma);

/// Hahn polynomial Q_k(i; alpha, beta; N) = 3F2(-k, k+alpha+beta+1, -i; alpha+1, -N; 1).
template <class Real>
Real hahn_Q(int k, int i, Real alpha, Real beta, int big_n) {
  if (k < 0 || k > big_n) throw std::domain_error("hahn_Q: need 0 <= k <= N");
  const HypSpec<Real> spec{{Real(-k), Real(k) + alpha + beta + Real(1), Real(-i)},
                           {alpha + Real(1), Real(-big_n)},
                           Real(1)};
  return hyp_terminating(spec);
}

/// Summed in long double: the terms alternate and grow quickly with k.
inline double hahn_Q(int k, int i, const WeightParams& p, int big_n) {
  return static_cast<double>(hahn_Q<long double>(k, i, p.alpha(), p.beta(), big_n));
}

/// Jacobi eigenvalue lambda_k = k (k + sigma).
inline double lambda_eig(int k, const WeightParams& p) {
  return static_cast<double>(k) * (static_cast<double>(k) + p.sigma());
}

}  // namespace dualbern
