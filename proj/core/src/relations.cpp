#include "dualbern/relations.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace dualbern {

namespace {

// sum of terms / max |term|; zero if every term vanishes.
double scaled_sum(std::initializer_list<double> terms) {
  double s = 0.0;
  double m = 0.0;
  for (double t : terms) {
    s += t;
    m = std::max(m, std::abs(t));
  }
  return m > 0.0 ? s / m : 0.0;
}

Poly monomial(std::initializer_list<double> c) { return Poly(Basis::MonomialX, std::vector<double>(c)); }

// Value and derivatives 0..4 of D^n_i at x (all zero for i outside 0..n).
struct DualJet {
  std::array<double, 5> d{};
};

DualJet dual_jet(int n, int i, const WeightParams& p, double x) {
  DualJet jet;
  if (i < 0 || i > n) return jet;
  Poly q = dual_poly_near(n, i, p, x);
  for (int k = 0; k < 5; ++k) {
    jet.d[k] = poly_eval(q, x);
    q = poly_derive(q);
  }
  return jet;
}

double dual_value(int n, int i, const WeightParams& p, double x) {
  if (i < 0 || i > n) return 0.0;
  return poly_eval(dual_poly_near(n, i, p, x), x);
}

}  // namespace

Poly DiffOperator::apply(const Poly& f) const {
  Poly g = to_monomial(f);
  Poly out = Poly::zero(Basis::MonomialX);
  for (const Poly& c : coeff) {
    out = out + poly_mul(c, g);
    g = poly_derive(g);
  }
  return out;
}

double DiffOperator::apply_at(const Poly& f, double x) const {
  double s = 0.0;
  Poly g = f;
  for (const Poly& c : coeff) {
    s += poly_eval(c, x) * poly_eval(g, x);
    g = poly_derive(g);
  }
  return s;
}

DiffOperator compose(const DiffOperator& lhs, const DiffOperator& rhs) {
  // p_k D^k (q_l D^l) = p_k sum_r C(k,r) q_l^{(k-r)} D^{l+r}
  const int order = lhs.order() + rhs.order();
  std::vector<Poly> out(static_cast<std::size_t>(order) + 1, Poly::zero(Basis::MonomialX));
  for (int k = 0; k <= lhs.order(); ++k) {
    for (int l = 0; l <= rhs.order(); ++l) {
      for (int r = 0; r <= k; ++r) {
        const Poly term = poly_mul(lhs.coeff[k], poly_derive(rhs.coeff[l], k - r)) * binomial(k, r);
        out[l + r] = out[l + r] + term;
      }
    }
  }
  return DiffOperator{std::move(out)};
}

DiffOperator jacobi_operator(double alpha, double beta) {
  const double s1 = alpha + beta + 2.0;
  return DiffOperator{{Poly::zero(Basis::MonomialX), monomial({0.5 * (alpha - beta - s1), s1}), monomial({0.0, -1.0, 1.0})}};
}

DiffOperator dual_operator_m(int n, int i, const WeightParams& p) {
  const double s = p.sigma();
  return DiffOperator{{monomial({n + s + 1.0}), monomial({-i - p.beta() - 2.0, n + s + 3.0}), monomial({0.0, -1.0, 1.0})}};
}

DiffOperator dual_operator_n(int n, const WeightParams& p) {
  DiffOperator op = jacobi_operator(p.alpha() + 1.0, p.beta() + 1.0);
  op.coeff[0] = monomial({-static_cast<double>(n) * (n + p.sigma() + 2.0)});
  return op;
}

double residual_f_lemma(int n, int i, int j, double alpha) {
  const double f_next = i + 1 > n ? 0.0 : f_kernel(n, i + 1, j, alpha);
  return scaled_sum({(i - n) * (n - i + alpha) * f_next, -(i + 1.0) * (n + j - i + alpha + 1.0) * f_kernel(n, i, j, alpha),
                     (n + 1.0) * (n + alpha + 1.0)});
}

double residual_diffrec_1(int n, int i, const WeightParams& p, double x) {
  const DualJet jet = dual_jet(n, i, p, x);
  const double a = dual_A(n, i, p);
  const double r = jacobi_R<double>(n, p.alpha(), p.beta() + 1.0, x);
  return scaled_sum({(1.0 - x) * jet.d[1], -(n - i + p.alpha() + 1.0) * jet.d[0],
                     -(i - n) * (i + p.beta() + 1.0) / (i + 1.0) * dual_value(n, i + 1, p, x),
                     a * (n + p.alpha() + 1.0) / (i + 1.0) * r});
}

double residual_diffrec_2(int n, int i, const WeightParams& p, double x) {
  const DualJet jet = dual_jet(n, i, p, x);
  const double a = dual_A(n, i, p);
  const double r = jacobi_R<double>(n, p.alpha() + 1.0, p.beta(), x);
  return scaled_sum({x * jet.d[1], (i + p.beta() + 1.0) * jet.d[0],
                     -i * (n - i + p.alpha() + 1.0) / (n - i + 1.0) * dual_value(n, i - 1, p, x),
                     -a * (n + p.beta() + 1.0) / (n - i + 1.0) * r});
}

double residual_diffrec_3(int n, int i, const WeightParams& p, double x) {
  const DualJet jet = dual_jet(n, i, p, x);
  const double up = (i - n) * (i + p.beta() + 1.0);
  const double down = i * (i - p.alpha() - n - 1.0);
  return scaled_sum({x * (x - 1.0) * jet.d[2],
                     0.5 * (p.alpha() - p.beta() + (p.sigma() + 1.0) * (2.0 * x - 1.0)) * jet.d[1],
                     -up * dual_value(n, i + 1, p, x), -down * dual_value(n, i - 1, p, x), (down + up) * jet.d[0]});
}

double residual_ode2(int n, int i, const WeightParams& p, double x) {
  const DualJet jet = dual_jet(n, i, p, x);
  const double s = p.sigma();
  const double r = jacobi_R<double>(n, p.alpha() + 1.0, p.beta() + 1.0, x);
  return scaled_sum({x * (x - 1.0) * jet.d[2], ((n + s + 3.0) * x - i - p.beta() - 2.0) * jet.d[1], (n + s + 1.0) * jet.d[0],
                     -(n + s + 1.0) * dual_A(n, i, p) * r});
}

OdeCoeffs ode4_coeffs(int n, int i, const WeightParams& p) {
  const double s = p.sigma();
  const double al = p.alpha();
  const double be = p.beta();
  const double nn = n;
  const double ii = i;
  OdeCoeffs c;
  c.w[4] = monomial({0.0, 0.0, 1.0, -2.0, 1.0});
  // x(x-1)[(n+2 sigma+10)x - i - 2 beta - 6]
  c.w[3] = poly_mul(monomial({0.0, -1.0, 1.0}), monomial({-ii - 2.0 * be - 6.0, nn + 2.0 * s + 10.0}));
  c.w[2] = monomial({(be + 2.0) * (ii + be + 3.0),
                     (nn - 1.0) * (nn - 1.0) + al * nn - 2.0 * be - (s + 3.0) * (ii + 2.0 * be + 8.0) - 5.0,
                     (nn + s + 3.0) * (s - nn + 7.0) + s + 3.0});
  c.w[1] = monomial({(2.0 - nn) * (ii + be + 2.0) - 2.0 * ii, nn * nn + (nn - 2.0) * (s + 3.0)}) * -(nn + s + 2.0);
  c.w[0] = monomial({-nn * (nn + s + 1.0) * (nn + s + 2.0)});
  return c;
}

OdeCoeffs ode4_coeffs_composed(int n, int i, const WeightParams& p) {
  const DiffOperator q4 = compose(dual_operator_n(n, p), dual_operator_m(n, i, p));
  OdeCoeffs c;
  for (int j = 0; j <= 4; ++j) c.w[j] = j <= q4.order() ? q4.coeff[j] : Poly::zero(Basis::MonomialX);
  return c;
}

double ode4_composition_mismatch(int n, int i, const WeightParams& p) {
  const OdeCoeffs a = ode4_coeffs(n, i, p);
  const OdeCoeffs b = ode4_coeffs_composed(n, i, p);
  double diff = 0.0;
  double scale = 0.0;
  for (int j = 0; j <= 4; ++j) {
    scale = std::max({scale, a.w[j].max_abs_coeff(), b.w[j].max_abs_coeff()});
    diff = std::max(diff, (a.w[j] - b.w[j]).max_abs_coeff());
  }
  return scale > 0.0 ? diff / scale : diff;
}

double residual_ode4(int n, int i, const WeightParams& p, double x) {
  const DualJet jet = dual_jet(n, i, p, x);
  const OdeCoeffs c = ode4_coeffs(n, i, p);
  return scaled_sum({poly_eval(c.w[0], x) * jet.d[0], poly_eval(c.w[1], x) * jet.d[1], poly_eval(c.w[2], x) * jet.d[2],
                     poly_eval(c.w[3], x) * jet.d[3], poly_eval(c.w[4], x) * jet.d[4]});
}

double rec4_z(int n, int i, const WeightParams& p) {
  const double al = p.alpha();
  const double be = p.beta();
  const double s = p.sigma();
  const double nn = n;
  const double ii = i;
  return -6.0 * ii * ii * ii + 3.0 * (3.0 * nn + al - be) * ii * ii -
         (nn * (5.0 * nn - 6.0 * be) + (4.0 * nn + 3.0) * s + 3.0) * ii +
         nn * ((nn + 1.0) * (nn + al + 1.0) + 2.0 * be + 2.0);
}

std::array<double, 5> rec4_coeffs(int n, int i, const WeightParams& p, double x) {
  const double al = p.alpha();
  const double be = p.beta();
  const double nn = n;
  const double ii = i;
  const double m = nn - ii + al;  // n - i + alpha
  const double b = ii + be;       // i + beta
  std::array<double, 5> v{};
  v[0] = (1.0 - x) * pochhammer(ii - 1.0, 2) * pochhammer(m, 3);
  v[1] = -ii * pochhammer(m, 2) *
         (b * (nn - 3.0 * ii) +
          (nn * (nn - 3.0 * ii + al - be + 4.0) + ii * (4.0 * ii - al + 3.0 * be - 4.0) + 2.0 * (al + 2.0)) * x);
  v[2] = b * m * (rec4_z(n, i, p) * x + (ii + 1.0) * (ii + be + 1.0) * (3.0 * ii - 2.0 * nn));
  v[3] = (ii - nn) * pochhammer(b, 2) *
         ((ii + 2.0) * (ii + be + 2.0) -
          (nn * (2.0 * nn - 5.0 * ii + 2.0 * al) + ii * (4.0 * ii - 3.0 * al + be + 4.0) + 2.0 * (be + 2.0)) * x);
  v[4] = x * b * pochhammer(ii + be + 1.0, 2) * pochhammer(nn - ii - 1.0, 2);
  return v;
}

namespace {

struct ComposedRec4 {
  std::array<double, 5> coeff{};
  double term_scale = 0.0;  // largest single product entering any coefficient
};

ComposedRec4 compose_rec4(int n, int i, const WeightParams& p, double x) {
  // N o M with N y_i = y_{i+1}/A_{i+1} - 2 y_i/A_i + y_{i-1}/A_{i-1}, multiplied through by
  // A_i (alpha+n-i)(beta+i) using A_i/A_{i+1} = -(beta+i+1)/(alpha+n-i) and
  // A_i/A_{i-1} = -(alpha+n-i+1)/(beta+i).
  const double m = p.alpha() + n - i;
  const double b = p.beta() + i;
  const double wp = -(p.beta() + i + 1.0) * b;
  const double w0 = -2.0 * m * b;
  const double wm = -(p.alpha() + n - i + 1.0) * m;
  const RecurrenceStencil sp = recurrence_stencil(n, i + 1, p, x);
  const RecurrenceStencil s0 = recurrence_stencil(n, i, p, x);
  const RecurrenceStencil sm = recurrence_stencil(n, i - 1, p, x);
  const std::array<double, 9> terms = {wm * sm.lower, wm * sm.diag,   w0 * s0.lower, wm * sm.upper, w0 * s0.diag,
                                       wp * sp.lower, w0 * s0.upper, wp * sp.diag,   wp * sp.upper};
  ComposedRec4 out;
  out.coeff = {terms[0], terms[1] + terms[2], terms[3] + terms[4] + terms[5], terms[6] + terms[7], terms[8]};
  for (double t : terms) out.term_scale = std::max(out.term_scale, std::abs(t));
  return out;
}

}  // namespace

std::array<double, 5> rec4_coeffs_composed(int n, int i, const WeightParams& p, double x) {
  return compose_rec4(n, i, p, x).coeff;
}

double rec4_composition_mismatch(int n, int i, const WeightParams& p, double x) {
  const auto a = rec4_coeffs(n, i, p, x);
  const ComposedRec4 b = compose_rec4(n, i, p, x);
  double diff = 0.0;
  double scale = b.term_scale;
  for (int j = 0; j < 5; ++j) {
    diff = std::max(diff, std::abs(a[j] - b.coeff[j]));
    scale = std::max(scale, std::abs(a[j]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

double residual_rec_nonhomog(const DualTable& table, int i) {
  const int n = table.n;
  const WeightParams& p = table.params;
  const double x = table.x;
  const RecurrenceStencil st = recurrence_stencil(n, i, p, x);
  const double g = recurrence_rhs(n, i, p, x, dual_A(n, i, p), jacobi_R<double>(n, p.alpha() + 1.0, p.beta(), x),
                                  jacobi_R<double>(n, p.alpha(), p.beta() + 1.0, x));
  return scaled_sum({st.lower * table.at(i - 1), st.diag * table.at(i), st.upper * table.at(i + 1), -g});
}

double residual_rec_nonhomog(int n, int i, const WeightParams& p, double x) {
  return residual_rec_nonhomog(eval_table_short_jacobi(n, p, x), i);
}

double residual_rec4(const DualTable& table, int i) {
  const auto v = rec4_coeffs(table.n, i, table.params, table.x);
  return scaled_sum({v[0] * table.at(i - 2), v[1] * table.at(i - 1), v[2] * table.at(i), v[3] * table.at(i + 1),
                     v[4] * table.at(i + 2)});
}

double residual_rec4(int n, int i, const WeightParams& p, double x) {
  return residual_rec4(eval_table_short_jacobi(n, p, x), i);
}

double hahn_operator_apply(const std::function<double(int)>& f, int i, double alpha, double beta, int big_n) {
  const double a = (i - big_n) * (i + alpha + 1.0);
  const double b = i * (i - beta - big_n - 1.0);
  // b(0) = 0 and a(N) = 0, so the outside neighbour is never needed.
  const double fwd = a == 0.0 ? 0.0 : a * f(i + 1);
  const double bwd = b == 0.0 ? 0.0 : b * f(i - 1);
  return fwd - (a + b) * f(i) + bwd;
}

double residual_intertwining(int n, int i, const WeightParams& p, double x) {
  const DiffOperator op = jacobi_operator(p.alpha(), p.beta());
  const Poly di = dual_poly_near(n, i, p, x);
  const double lhs = op.apply_at(di, x);
  auto value = [&](int k) { return dual_value(n, k, p, x); };
  const double rhs = hahn_operator_apply(value, i, p.beta(), p.alpha(), n);
  // Operator L^{(beta,alpha,n)}: a(i) = (i-n)(i+beta+1), b(i) = i(i-alpha-n-1).
  const double a = (i - n) * (i + p.beta() + 1.0);
  const double b = i * (i - p.alpha() - n - 1.0);
  double scale = std::max({std::abs(lhs), std::abs(a * value(i + 1)), std::abs((a + b) * value(i)),
                           std::abs(b * value(i - 1))});
  for (int k = 1; k <= 2; ++k)
    scale = std::max(scale, std::abs(poly_eval(op.coeff[k], x) * poly_eval(poly_derive(di, k), x)));
  return scale > 0.0 ? (lhs - rhs) / scale : 0.0;
}

double residual_jacobi_contiguity(int n, const WeightParams& p, double x) {
  const double al = p.alpha();
  const double be = p.beta();
  return scaled_sum({(n + al + 1.0) * jacobi_R<double>(n, al, be + 1.0, x),
                     (n + be + 1.0) * jacobi_R<double>(n, al + 1.0, be, x),
                     -(n + p.sigma() + 1.0) * jacobi_R<double>(n, al + 1.0, be + 1.0, x)});
}

double residual_h_linear(int n, int i, const WeightParams& p, double x) {
  const double r_a1 = jacobi_R<double>(n, p.alpha() + 1.0, p.beta(), x);
  const double r_b1 = jacobi_R<double>(n, p.alpha(), p.beta() + 1.0, x);
  auto h = [&](int k) { return recurrence_rhs(n, k, p, x, 1.0, r_a1, r_b1); };
  return scaled_sum({h(i + 2), -2.0 * h(i + 1), h(i)});
}

Poly jacobi_ode_residual(int k, const WeightParams& p) {
  const Poly r = to_monomial(jacobi_R_poly(k, p.alpha(), p.beta()));
  return jacobi_operator(p.alpha(), p.beta()).apply(r) - r * lambda_eig(k, p);
}

double residual_hahn_equation(int k, int i, const WeightParams& p, int big_n) {
  auto q = [&](int j) { return hahn_Q(k, j, p, big_n); };
  const double lhs = hahn_operator_apply(q, i, p.alpha(), p.beta(), big_n);
  const double rhs = lambda_eig(k, p) * q(i);
  const double a = (i - big_n) * (i + p.alpha() + 1.0);
  const double b = i * (i - p.beta() - big_n - 1.0);
  const double scale = std::max({std::abs(a * q(std::min(i + 1, big_n))), std::abs((a + b) * q(i)),
                                 std::abs(b * q(std::max(i - 1, 0))), std::abs(rhs)});
  return scale > 0.0 ? (lhs - rhs) / scale : 0.0;
}

}  // namespace dualbern
