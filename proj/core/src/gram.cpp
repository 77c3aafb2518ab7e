#include <cmath>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "dualbern/dual.hpp"

namespace dualbern {

namespace {

using ExtMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

long double log_binomial(int n, int k) {
  return std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
         std::lgamma(static_cast<long double>(n - k) + 1);
}

// Gram entries in extended precision with libm's lgamma, independent of the
// library's own log_gamma.
ExtMatrix gram_extended(int n, const WeightParams& p) {
  const long double al = p.alpha();
  const long double be = p.beta();
  ExtMatrix g(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const long double a = i + j + be + 1;
      const long double b = 2 * n - i - j + al + 1;
      const long double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
      g(i, j) = std::exp(log_binomial(n, i) + log_binomial(n, j) + log_beta);
    }
  }
  return g;
}

}  // namespace

DenseMatrix gram_matrix(int n, const WeightParams& p) {
  if (n < 0) throw std::out_of_range("gram_matrix: n must be nonnegative");
  const ExtMatrix g = gram_extended(n, p);
  DenseMatrix out(n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) out(i, j) = static_cast<double>(g(i, j));
  return out;
}

GramOracle::GramOracle(int n, const WeightParams& p) : n_(n), params_(p) {
  if (n < 0) throw std::out_of_range("GramOracle: n must be nonnegative");
  const ExtMatrix g = gram_extended(n, p);
  const Eigen::LLT<ExtMatrix> llt(g);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("GramOracle: Cholesky factorization failed (n too large for the oracle)");
  const ExtMatrix inv = llt.solve(ExtMatrix::Identity(n + 1, n + 1));
  inverse_.resize(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) inverse_[static_cast<std::size_t>(i) * (n + 1) + j] = inv(i, j);
}

std::vector<double> GramOracle::bernstein_coeffs(int j) const {
  if (j < 0 || j > n_) throw std::out_of_range("GramOracle: index out of range");
  // The inverse is symmetric, so row j equals column j.
  const auto row = inverse_.begin() + static_cast<std::ptrdiff_t>(j) * (n_ + 1);
  return std::vector<double>(row, row + n_ + 1);
}

DualTable GramOracle::eval(double x) const {
  // Bernstein values B^n_i(x) in extended precision.
  const long double u = 1.0L - x;
  std::vector<long double> b(static_cast<std::size_t>(n_) + 1, 0.0L);
  b[0] = 1.0L;
  for (int m = 1; m <= n_; ++m) {
    for (int k = m; k >= 1; --k) b[k] = u * b[k] + x * b[k - 1];
    b[0] *= u;
  }
  DualTable t{n_, params_, x, std::vector<double>(static_cast<std::size_t>(n_) + 1, 0.0), DualMethod::GramOracle};
  for (int j = 0; j <= n_; ++j) {
    long double s = 0;
    for (int i = 0; i <= n_; ++i) s += inverse_[static_cast<std::size_t>(j) * (n_ + 1) + i] * b[i];
    t.values[j] = static_cast<double>(s);
  }
  return t;
}

DualTable dual_via_gram(int n, const WeightParams& p, double x) { return GramOracle(n, p).eval(x); }

}  // namespace dualbern
