#pragma once

#include <span>
#include <vector>

namespace dualbern {

/// Basis in which a Poly stores its coefficients.
enum class Basis {
  MonomialX,     ///< coeffs[j] multiplies x^j
  ShiftedPower,  ///< coeffs[j] multiplies (1-x)^j
};

/// Dense univariate polynomial in one of two power bases.
///
/// Normalization drops trailing coefficients that are exactly zero, so the
/// zero polynomial is stored as {0}. Tiny nonzero coefficients are kept.
class Poly {
 public:
  Poly();
  Poly(Basis basis, std::vector<double> coeffs);

  static Poly zero(Basis basis);
  static Poly constant(Basis basis, double c);

  Basis basis() const noexcept { return basis_; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  double operator[](int j) const noexcept;
  bool is_zero() const noexcept;
  double max_abs_coeff() const noexcept;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(double s) const;

 private:
  void normalize();

  Basis basis_;
  std::vector<double> coeffs_;
};

/// Horner evaluation in the native basis (in t = 1-x for ShiftedPower).
double poly_eval(const Poly& p, double x);

/// Exact derivative d/dx, in the same basis.
Poly poly_derive(const Poly& p);

/// k-th derivative.
Poly poly_derive(const Poly& p, int k);

/// Convolution product; throws std::invalid_argument on basis mismatch.
Poly poly_mul(const Poly& p, const Poly& q);

/// ShiftedPower -> MonomialX via binomial expansion of (1-x)^j.
/// MonomialX input is returned unchanged.
Poly to_monomial(const Poly& p);

/// Binomial coefficient C(n, k) as a double; 0 outside 0 <= k <= n.
double binomial(int n, int k);

/// B^n_i(x) = C(n,i) x^i (1-x)^(n-i); zero for i outside 0..n.
double bernstein_eval(int n, int i, double x);

/// All B^n_0(x)..B^n_n(x).
std::vector<double> bernstein_all(int n, double x);

/// sum_k b[k] B^n_k(x) by de Casteljau, n = b.size() - 1.
double de_casteljau(std::span<const double> b, double x);

}  // namespace dualbern
