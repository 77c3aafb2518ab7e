#include "dualbern/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dualbern {

Poly::Poly() : Poly(Basis::MonomialX, {0.0}) {}

Poly::Poly(Basis basis, std::vector<double> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
  normalize();
}

Poly Poly::zero(Basis basis) { return Poly(basis, {0.0}); }

Poly Poly::constant(Basis basis, double c) { return Poly(basis, {c}); }

double Poly::operator[](int j) const noexcept {
  if (j < 0 || j > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(j)];
}

bool Poly::is_zero() const noexcept {
  return coeffs_.size() == 1 && coeffs_[0] == 0.0;
}

double Poly::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

void Poly::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Poly Poly::operator+(const Poly& other) const {
  if (basis_ != other.basis_) throw std::invalid_argument("Poly: basis mismatch in +");
  std::vector<double> c(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j] += coeffs_[j];
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[j] += other.coeffs_[j];
  return Poly(basis_, std::move(c));
}

Poly Poly::operator-(const Poly& other) const { return *this + other * -1.0; }

Poly Poly::operator*(double s) const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v *= s;
  return Poly(basis_, std::move(c));
}

double poly_eval(const Poly& p, double x) {
  const double t = p.basis() == Basis::ShiftedPower ? 1.0 - x : x;
  const auto c = p.coeffs();
  double acc = 0.0;
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * t + c[j];
  return acc;
}

Poly poly_derive(const Poly& p) {
  const auto c = p.coeffs();
  if (c.size() <= 1) return Poly::zero(p.basis());
  // d/dx (1-x)^j = -j (1-x)^(j-1)
  const double sign = p.basis() == Basis::ShiftedPower ? -1.0 : 1.0;
  std::vector<double> d(c.size() - 1);
  for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = sign * static_cast<double>(j) * c[j];
  return Poly(p.basis(), std::move(d));
}

Poly poly_derive(const Poly& p, int k) {
  Poly r = p;
  for (int s = 0; s < k; ++s) r = poly_derive(r);
  return r;
}

Poly poly_mul(const Poly& p, const Poly& q) {
  if (p.basis() != q.basis()) throw std::invalid_argument("poly_mul: basis mismatch");
  const auto a = p.coeffs();
  const auto b = q.coeffs();
  std::vector<double> c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return Poly(p.basis(), std::move(c));
}

Poly to_monomial(const Poly& p) {
  if (p.basis() == Basis::MonomialX) return p;
  const auto c = p.coeffs();
  std::vector<double> m(c.size(), 0.0);
  // (1-x)^j = sum_k C(j,k) (-1)^k x^k
  for (std::size_t j = 0; j < c.size(); ++j) {
    double b = 1.0;
    for (std::size_t k = 0; k <= j; ++k) {
      m[k] += ((k % 2) ? -b : b) * c[j];
      b = b * static_cast<double>(j - k) / static_cast<double>(k + 1);
    }
  }
  return Poly(Basis::MonomialX, std::move(m));
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
  return r < 9.0e15 ? std::nearbyint(r) : r;
}

double bernstein_eval(int n, int i, double x) {
  if (i < 0 || i > n) return 0.0;
  return binomial(n, i) * std::pow(x, i) * std::pow(1.0 - x, n - i);
}

std::vector<double> bernstein_all(int n, double x) {
  // Triangular scheme: B^{m+1}_k = (1-x) B^m_k + x B^m_{k-1}.
  std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
  b[0] = 1.0;
  const double u = 1.0 - x;
  for (int m = 1; m <= n; ++m) {
    for (int k = m; k >= 1; --k) b[k] = u * b[k] + x * b[k - 1];
    b[0] *= u;
  }
  return b;
}

double de_casteljau(std::span<const double> b, double x) {
  if (b.empty()) return 0.0;
  std::vector<double> w(b.begin(), b.end());
  const double u = 1.0 - x;
  for (std::size_t r = 1; r < w.size(); ++r)
    for (std::size_t k = 0; k + r < w.size(); ++k) w[k] = u * w[k] + x * w[k + 1];
  return w[0];
}

}  // namespace dualbern
