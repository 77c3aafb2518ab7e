#pragma once

// Residual evaluators for the differential, difference and recurrence
// identities satisfied by dual Bernstein polynomials. Every residual is
// divided by the largest magnitude among the terms that enter it, so a value
// near machine epsilon means the identity holds to working precision.
//
// Derivatives come from the exact polynomial representation (dual_poly_near)
// and poly_derive; nothing here differentiates numerically.

#include <array>
#include <functional>
#include <vector>

#include "dualbern/dual.hpp"
#include "dualbern/poly.hpp"
#include "dualbern/specfun.hpp"

namespace dualbern {

/// Linear differential operator sum_k coeff[k](x) D^k with MonomialX coefficients.
struct DiffOperator {
  std::vector<Poly> coeff;

  /// Result as a MonomialX polynomial (f is converted first).
  Poly apply(const Poly& f) const;
  /// (op f)(x), differentiating f in its own basis.
  double apply_at(const Poly& f, double x) const;
  int order() const noexcept { return static_cast<int>(coeff.size()) - 1; }
};

/// (lhs o rhs) as a single operator, using Leibniz' rule.
DiffOperator compose(const DiffOperator& lhs, const DiffOperator& rhs);

/// L^{(alpha,beta)} = x(x-1) D^2 + (alpha - beta + (sigma+1)(2x-1))/2 D.
DiffOperator jacobi_operator(double alpha, double beta);

/// M_{ni} = x(x-1) D^2 + ((n+sigma+3)x - i - beta - 2) D + (n+sigma+1) I.
DiffOperator dual_operator_m(int n, int i, const WeightParams& p);

/// N_{ni} = L^{(alpha+1,beta+1)} - lambda_n^{(alpha+1,beta+1)} I.
DiffOperator dual_operator_n(int n, const WeightParams& p);

/// (i-n)(n-i+alpha) F(i+1,j) - (i+1)(n+j-i+alpha+1) F(i,j) + (n+1)(n+alpha+1),
/// with F(n+1, j) = 0; scaled.
double residual_f_lemma(int n, int i, int j, double alpha);

/// ((1-x)D - (n-i+alpha+1)) D_i  vs  (i-n)(i+beta+1)/(i+1) D_{i+1} - A_{ni}(n+alpha+1)/(i+1) R_n^{(alpha,beta+1)}.
double residual_diffrec_1(int n, int i, const WeightParams& p, double x);

/// (xD + (i+beta+1)) D_i  vs  i(n-i+alpha+1)/(n-i+1) D_{i-1} + A_{ni}(n+beta+1)/(n-i+1) R_n^{(alpha+1,beta)}.
double residual_diffrec_2(int n, int i, const WeightParams& p, double x);

/// L^{(alpha,beta)} D_i  vs  the Hahn difference operator in i.
double residual_diffrec_3(int n, int i, const WeightParams& p, double x);

/// M_{ni} D_i  vs  (n+sigma+1) A_{ni} R_n^{(alpha+1,beta+1)}.
double residual_ode2(int n, int i, const WeightParams& p, double x);

/// w_0..w_4 of the fourth-order equation sum_j w_j D^j D_i = 0.
struct OdeCoeffs {
  std::array<Poly, 5> w;
};

/// The explicit coefficient polynomials, as printed.
OdeCoeffs ode4_coeffs(int n, int i, const WeightParams& p);

/// The coefficients of N o M obtained by operator composition.
OdeCoeffs ode4_coeffs_composed(int n, int i, const WeightParams& p);

/// max_j,k |explicit - composed| / max |coefficient|.
double ode4_composition_mismatch(int n, int i, const WeightParams& p);

double residual_ode4(int n, int i, const WeightParams& p, double x);

/// z(i) inside v_0.
double rec4_z(int n, int i, const WeightParams& p);

/// [v_{-2}(i), v_{-1}(i), v_0(i), v_1(i), v_2(i)] as printed.
std::array<double, 5> rec4_coeffs(int n, int i, const WeightParams& p, double x);

/// Coefficients of D_{i-2}..D_{i+2} in N o M, multiplied by A_{ni}(alpha+n-i)(beta+i).
std::array<double, 5> rec4_coeffs_composed(int n, int i, const WeightParams& p, double x);

double rec4_composition_mismatch(int n, int i, const WeightParams& p, double x);

/// M_i D_i - G_{ni}(x) with values taken from `table`; scaled.
double residual_rec_nonhomog(const DualTable& table, int i);
/// Same, with values from the ShortJacobi evaluator.
double residual_rec_nonhomog(int n, int i, const WeightParams& p, double x);

/// sum_j v_j(i) D_{i+j} / max_j |v_j(i) D_{i+j}|.
double residual_rec4(const DualTable& table, int i);
double residual_rec4(int n, int i, const WeightParams& p, double x);

/// a(i) f(i+1) - c(i) f(i) + b(i) f(i-1) with a = (i-N)(i+alpha+1),
/// b = i(i-beta-N-1), c = a + b.
double hahn_operator_apply(const std::function<double(int)>& f, int i, double alpha, double beta, int big_n);

/// L^{(alpha,beta)} D_i (exact calculus) vs L^{(beta,alpha,n)}_i D_i (difference in i); scaled.
double residual_intertwining(int n, int i, const WeightParams& p, double x);

/// (n+alpha+1) R_n^{(alpha,beta+1)} + (n+beta+1) R_n^{(alpha+1,beta)} - (n+sigma+1) R_n^{(alpha+1,beta+1)}; scaled.
double residual_jacobi_contiguity(int n, const WeightParams& p, double x);

/// Second difference in i of H(i) = G_{ni}(x) / A_{ni}; scaled.
double residual_h_linear(int n, int i, const WeightParams& p, double x);

/// Jacobi ODE residual L R_k - lambda_k R_k as a MonomialX polynomial.
Poly jacobi_ode_residual(int k, const WeightParams& p);

/// Hahn difference equation residual at i, scaled.
double residual_hahn_equation(int k, int i, const WeightParams& p, int big_n);

}  // namespace dualbern
