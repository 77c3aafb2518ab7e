#include "dualbern/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dualbern {

double integrate_poly_exact(const Poly& p, const WeightParams& params) {
  const std::vector<long double> c(p.coeffs().begin(), p.coeffs().end());
  return static_cast<double>(integrate_power_exact<long double>(c, p.basis(), params));
}

namespace {

constexpr int kMaxQlIterations = 100;

// Implicit-shift QL on a symmetric tridiagonal matrix (diag d, off-diagonal
// e[i] coupling i and i+1). Only the first row z of the eigenvector matrix is
// accumulated. On return d holds the eigenvalues.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int m = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < m; ++l) {
    int iter = 0;
    int mm;
    do {
      for (mm = l; mm < m - 1; ++mm) {
        const double dd = std::abs(d[mm]) + std::abs(d[mm + 1]);
        if (std::abs(e[mm]) <= eps * dd) break;
      }
      if (mm == l) break;
      if (++iter > kMaxQlIterations) throw std::runtime_error("gauss_jacobi_rule: QL iteration did not converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[mm] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i;
      for (i = mm - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[mm] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[mm] = 0.0;
    } while (mm != l);
  }
}

}  // namespace

QuadRule gauss_jacobi_rule(int m, const WeightParams& params) {
  if (m < 1) throw std::invalid_argument("gauss_jacobi_rule: m must be >= 1");
  const double a = params.alpha();
  const double b = params.beta();
  const double ab = a + b;
  // Monic Jacobi recurrence on [-1,1], mapped to [0,1] by x = (1+t)/2.
  std::vector<double> d(static_cast<std::size_t>(m));
  std::vector<double> e(static_cast<std::size_t>(m), 0.0);
  for (int k = 0; k < m; ++k) {
    const double s = 2.0 * k + ab;
    const double ak = k == 0 ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    d[k] = 0.5 * (1.0 + ak);
  }
  for (int k = 1; k < m; ++k) {
    const double s = 2.0 * k + ab;
    const double bk = k == 1 ? 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
                             : 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    e[k - 1] = 0.5 * std::sqrt(bk);
  }
  std::vector<double> z(static_cast<std::size_t>(m), 0.0);
  z[0] = 1.0;
  tridiagonal_ql(d, e, z);

  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });
  QuadRule rule{m, {}, {}, params};
  rule.nodes.reserve(order.size());
  rule.weights.reserve(order.size());
  for (int k : order) {
    rule.nodes.push_back(d[k]);
    rule.weights.push_back(params.bigK() * z[k] * z[k]);
  }
  return rule;
}

double integrate_fn(const std::function<double(double)>& f, const QuadRule& rule) {
  double s = 0.0;
  for (std::size_t r = 0; r < rule.nodes.size(); ++r) {
    const double v = f(rule.nodes[r]);
    if (!std::isfinite(v)) throw std::domain_error("integrate_fn: integrand is not finite at a node");
    s += rule.weights[r] * v;
  }
  return s;
}

}  // namespace dualbern
