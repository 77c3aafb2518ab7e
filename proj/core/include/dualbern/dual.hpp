#pragma once

// Dual Bernstein polynomials D^n_i(x; alpha, beta): the basis of polynomials
// of degree <= n with <B^n_i, D^n_j> = delta_ij under the inner product
// <f, g> = int_0^1 (1-x)^alpha x^beta f(x) g(x) dx.
//
// Five evaluation algorithms plus a brute-force Gram-matrix oracle live here.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualbern/poly.hpp"
#include "dualbern/specfun.hpp"

namespace dualbern {

enum class DualMethod {
  JacobiHahn,        ///< full Jacobi expansion with Hahn coefficients, O(n^2) per value
  ShortJacobi,       ///< min(i, n-i)+1 Jacobi terms with shifted parameters
  ShiftedPowerForm,  ///< explicit (1-x)^j representation
  DegreeElevation,   ///< iterate the degree n -> n+1 relation from D^0_0
  RecurrenceOn_i,    ///< O(n) second-order recurrence in i
  GramOracle,        ///< inverse Bernstein Gram matrix
};

std::string_view to_string(DualMethod m);
std::optional<DualMethod> parse_method(std::string_view name);

/// The five production algorithms (everything except GramOracle).
inline constexpr DualMethod kAllMethods[] = {DualMethod::JacobiHahn, DualMethod::ShortJacobi,
                                             DualMethod::ShiftedPowerForm, DualMethod::DegreeElevation,
                                             DualMethod::RecurrenceOn_i};

/// D^n_0(x), ..., D^n_n(x) at one point, tagged with the producing algorithm.
struct DualTable {
  int n = 0;
  WeightParams params{0.0, 0.0};
  double x = 0.0;
  std::vector<double> values;
  DualMethod method = DualMethod::RecurrenceOn_i;

  /// values[i], or 0 for i outside 0..n.
  double at(int i) const noexcept {
    return (i < 0 || i > n) ? 0.0 : values[static_cast<std::size_t>(i)];
  }
  double max_abs() const noexcept;
};

/// A^{(alpha,beta)}_{ni} = (-1)^{n-i} (n+1) (sigma+1)_n / (K (alpha+1)_{n-i} (beta+1)_i).
double dual_A(int n, int i, const WeightParams& p);

/// A_{n,0}, ..., A_{n,n} via A_{n,i+1} = -A_{n,i} (alpha+n-i) / (beta+i+1).
std::vector<double> dual_A_all(int n, const WeightParams& p);

/// B^{(alpha,beta)}_{nj} = (-n)_j (n+sigma+1)_j / (j! (alpha+1)_j), j = 0..n.
std::vector<double> dual_B_all(int n, const WeightParams& p);

/// C^{(alpha,beta)}_{ni} = (-1)^{n-i+1} (2n+sigma+2) (sigma+1)_n / (K (alpha+1)_{n-i+1} (beta+1)_i).
double dual_C(int n, int i, const WeightParams& p);

struct DualConstants {
  int n = 0;
  int i = 0;
  double A = 0.0;
  std::vector<double> B;
  double C = 0.0;
};

DualConstants dual_constants(int n, int i, const WeightParams& p);

/// F(i,j) = 3F2(j-n, -i, 1; -n, -n-alpha; 1), for 0 <= i, j <= n.
double f_kernel(int n, int i, int j, double alpha);

/// Full table via the Jacobi expansion with Hahn coefficients Q_k(i; beta, alpha; n).
DualTable eval_via_jacobi_hahn(int n, const WeightParams& p, double x);

/// Single value via the short Jacobi form with min(i, n-i)+1 terms.
double eval_via_short_jacobi(int n, int i, const WeightParams& p, double x);
DualTable eval_table_short_jacobi(int n, const WeightParams& p, double x);

/// D^n_i as a ShiftedPower polynomial, c_j = A_{ni} (alpha+1)_n/(n+1)! B_{nj} F(i,j).
Poly coeffs_shifted_power(int n, int i, const WeightParams& p);

/// D^n_i as a MonomialX polynomial, obtained from the ShiftedPower form of
/// D^n_{n-i}(.; beta, alpha) through D^n_i(x; alpha, beta) = D^n_{n-i}(1-x; beta, alpha).
Poly coeffs_monomial_mirror(int n, int i, const WeightParams& p);

/// Whichever exact representation expands around the endpoint nearer to x:
/// the (1-x)^j form for x >= 1/2, the x^j form otherwise.
Poly dual_poly_near(int n, int i, const WeightParams& p, double x);

/// Table from the exact representations (dual_poly_near). At x = 0 or x = 1
/// only the constant coefficient is formed.
DualTable eval_via_shifted_power(int n, const WeightParams& p, double x);

/// <B^n_i, D^n_j> with x^i (1-x)^{n-i} folded into the weight and the
/// (1-x)^k coefficients of D^n_j integrated exactly. Should equal delta_ij.
double bernstein_dual_pairing(int n, int i, int j, const WeightParams& p);

/// One step D^n -> D^{n+1}:
///   D^{n+1}_i = (1 - i/(n+1)) D^n_i + i/(n+1) D^n_{i-1} + C_{ni} R_{n+1}(x).
DualTable elevate_degree(const DualTable& table);

/// Iterated elevation from D^0_0 = 1/K; O(n^2) per point.
DualTable eval_via_degree_elevation(int n, const WeightParams& p, double x);

/// Switch to the exact representation when min(x, 1-x) is below this.
inline constexpr double kEndpointThreshold = 1e-10;
/// Relative forward/backward mismatch that triggers the ShortJacobi fallback.
inline constexpr double kMidpointTolerance = 1e-8;

struct RecurrenceReport {
  DualTable table;
  double midpoint_discrepancy = 0.0;  ///< relative to table.max_abs()
  bool endpoint_regime = false;
  bool fell_back = false;
};

/// O(n) evaluation of the whole table: forward sweep of the second-order
/// non-homogeneous recurrence in i from D_0, D_1 and backward sweep from
/// D_n, D_{n-1}, meeting near i = x n where both sweeps are damped.
RecurrenceReport eval_all_recurrence_report(int n, const WeightParams& p, double x);
DualTable eval_all_recurrence(int n, const WeightParams& p, double x);

/// Coefficients of the second-order operator in i acting on D_{i-1}, D_i, D_{i+1}:
///   lower = (i)_2 (n-i+alpha+1)(x-1),
///   diag  = (i+1)(n-i+1)[(i+beta+1)(1-x) + (n-i+alpha+1)x],
///   upper = -(n-i)_2 (i+beta+1) x.
struct RecurrenceStencil {
  double lower = 0.0;
  double diag = 0.0;
  double upper = 0.0;
};

RecurrenceStencil recurrence_stencil(int n, int i, const WeightParams& p, double x);

/// Right-hand side G_{ni}(x) of the recurrence, given
/// r_a1 = R_n^{(alpha+1,beta)}(x) and r_b1 = R_n^{(alpha,beta+1)}(x).
double recurrence_rhs(int n, int i, const WeightParams& p, double x, double a_ni, double r_a1, double r_b1);

/// Row-major dense square matrix.
class DenseMatrix {
 public:
  explicit DenseMatrix(int size = 0) : size_(size), data_(static_cast<std::size_t>(size) * size, 0.0) {}
  int size() const noexcept { return size_; }
  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * size_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * size_ + c]; }

 private:
  int size_;
  std::vector<double> data_;
};

/// Bernstein Gram matrix: entry (i,j) = C(n,i) C(n,j) B(i+j+beta+1, 2n-i-j+alpha+1).
DenseMatrix gram_matrix(int n, const WeightParams& p);

/// Brute-force oracle: inverts the Gram matrix once (extended precision
/// Cholesky) and expands each D^n_j in the Bernstein basis.
class GramOracle {
 public:
  /// Throws std::runtime_error if the factorization fails.
  GramOracle(int n, const WeightParams& p);

  int n() const noexcept { return n_; }
  /// Bernstein coefficients of D^n_j (column j of the inverse).
  std::vector<double> bernstein_coeffs(int j) const;
  DualTable eval(double x) const;

 private:
  int n_;
  WeightParams params_;
  std::vector<long double> inverse_;  // row-major, symmetric
};

DualTable dual_via_gram(int n, const WeightParams& p, double x);

/// d(x) = sum_i d_i D^n_i(x); throws std::invalid_argument on length mismatch.
double eval_combination(std::span<const double> d, const DualTable& table);

/// Dispatch by method name.
DualTable evaluate(DualMethod method, int n, const WeightParams& p, double x);

}  // namespace dualbern
