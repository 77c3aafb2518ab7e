#include "dualbern/dual.hpp"

#include "dualbern/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dualbern {

namespace {

double sign_pow(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

// (sigma+1)_n / ((alpha+1)_{n-i} (beta+1)_i)
double dual_ratio(int n, int i, const WeightParams& p) {
  return pochhammer_ratio(p.sigma() + 1.0, n, p.alpha() + 1.0, n - i, p.beta() + 1.0, i);
}

void require_index(int n, int i, const char* who) {
  if (n < 0 || i < 0 || i > n) throw std::out_of_range(std::string(who) + ": need 0 <= i <= n");
}

}  // namespace

std::string_view to_string(DualMethod m) {
  switch (m) {
    case DualMethod::JacobiHahn: return "JacobiHahn";
    case DualMethod::ShortJacobi: return "ShortJacobi";
    case DualMethod::ShiftedPowerForm: return "ShiftedPowerForm";
    case DualMethod::DegreeElevation: return "DegreeElevation";
    case DualMethod::RecurrenceOn_i: return "RecurrenceOn_i";
    case DualMethod::GramOracle: return "GramOracle";
  }
  return "?";
}

std::optional<DualMethod> parse_method(std::string_view name) {
  for (auto m : {DualMethod::JacobiHahn, DualMethod::ShortJacobi, DualMethod::ShiftedPowerForm,
                 DualMethod::DegreeElevation, DualMethod::RecurrenceOn_i, DualMethod::GramOracle})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

double DualTable::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double dual_A(int n, int i, const WeightParams& p) {
  return sign_pow(n - i) * (n + 1.0) * dual_ratio(n, i, p) / p.bigK();
}

std::vector<double> dual_A_all(int n, const WeightParams& p) {
  std::vector<double> a(static_cast<std::size_t>(n) + 1);
  a[0] = dual_A(n, 0, p);
  for (int i = 0; i < n; ++i) a[i + 1] = -a[i] * (p.alpha() + n - i) / (p.beta() + i + 1.0);
  return a;
}

std::vector<double> dual_B_all(int n, const WeightParams& p) {
  std::vector<double> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1.0;
  for (int j = 0; j < n; ++j)
    b[j + 1] = b[j] * (-n + j) * (n + p.sigma() + 1.0 + j) / ((j + 1.0) * (p.alpha() + 1.0 + j));
  return b;
}

double dual_C(int n, int i, const WeightParams& p) {
  return sign_pow(n - i + 1) * (2.0 * n + p.sigma() + 2.0) *
         pochhammer_ratio(p.sigma() + 1.0, n, p.alpha() + 1.0, n - i + 1, p.beta() + 1.0, i) / p.bigK();
}

DualConstants dual_constants(int n, int i, const WeightParams& p) {
  require_index(n, i, "dual_constants");
  return DualConstants{n, i, dual_A(n, i, p), dual_B_all(n, p), dual_C(n, i, p)};
}

double f_kernel(int n, int i, int j, double alpha) {
  require_index(n, i, "f_kernel");
  require_index(n, j, "f_kernel");
  const double lower2 = -n - alpha;
  if (lower2 <= 0.0 && lower2 == std::round(lower2) && -lower2 < std::min(i, n - j))
    throw std::domain_error("f_kernel: -n-alpha is a nonpositive integer inside the summation range");
  const HypSpec<double> spec{{double(j - n), double(-i), 1.0}, {double(-n), lower2}, 1.0};
  return hyp_terminating(spec);
}

DualTable eval_via_jacobi_hahn(int n, const WeightParams& p, double x) {
  require_index(n, 0, "eval_via_jacobi_hahn");
  std::vector<double> weighted_r(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double c = k == 0 ? 1.0
                            : (2.0 * k + p.sigma()) *
                                  pochhammer_ratio(p.sigma() + 1.0, k - 1, p.alpha() + 1.0, k);
    weighted_r[k] = sign_pow(k) * c * jacobi_R(k, p, x) / p.bigK();
  }
  DualTable t{n, p, x, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0), DualMethod::JacobiHahn};
  for (int i = 0; i <= n; ++i) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += weighted_r[k] * hahn_Q(k, i, p.swapped(), n);
    t.values[i] = s;
  }
  return t;
}

double eval_via_short_jacobi(int n, int i, const WeightParams& p, double x) {
  require_index(n, i, "eval_via_short_jacobi");
  double s = 0.0;
  double c = 1.0;
  if (i <= n - i) {
    for (int k = 0; k <= i; ++k) {
      s += c * jacobi_R<double>(n - k, p.alpha(), p.beta() + k + 1.0, x);
      c *= double(-i + k) / double(-n + k);
    }
    return sign_pow(n - i) * dual_ratio(n, i, p) / p.bigK() * s;
  }
  const int m = n - i;
  for (int k = 0; k <= m; ++k) {
    s += sign_pow(k) * c * jacobi_R<double>(n - k, p.alpha() + k + 1.0, p.beta(), x);
    c *= double(-m + k) / double(-n + k);
  }
  return sign_pow(m) * dual_ratio(n, i, p) / p.bigK() * s;
}

DualTable eval_table_short_jacobi(int n, const WeightParams& p, double x) {
  DualTable t{n, p, x, std::vector<double>(static_cast<std::size_t>(n) + 1), DualMethod::ShortJacobi};
  for (int i = 0; i <= n; ++i) t.values[i] = eval_via_short_jacobi(n, i, p, x);
  return t;
}

namespace {

template <class Real>
Real f_kernel_t(int n, int i, int j, Real alpha) {
  const HypSpec<Real> spec{{Real(j - n), Real(-i), Real(1)}, {Real(-n), Real(-n) - alpha}, Real(1)};
  return hyp_terminating(spec);
}

// A_{ni} (alpha+1)_n / (n+1)!
template <class Real>
Real shifted_power_scale(int n, int i, const WeightParams& p) {
  const Real al = p.alpha();
  const Real be = p.beta();
  const Real s1 = Real(p.sigma()) + Real(1);
  Real s = Real(sign_pow(n - i)) / Real(p.bigK());
  // (sigma+1)_n (alpha+1)_n / ((alpha+1)_{n-i} (beta+1)_i n!), factors interleaved.
  for (int t = 0; t < n; ++t) {
    s *= (s1 + Real(t)) * (al + Real(1 + t)) / Real(t + 1);
    s /= t < n - i ? al + Real(1 + t) : be + Real(1 + t - (n - i));
  }
  return s;
}

template <class Real>
std::vector<Real> shifted_power_coeffs(int n, int i, const WeightParams& p) {
  const Real al = p.alpha();
  const Real top = Real(n) + Real(p.sigma()) + Real(1);
  const Real scale = shifted_power_scale<Real>(n, i, p);
  std::vector<Real> c(static_cast<std::size_t>(n) + 1);
  Real b = 1;  // B_{nj}
  for (int j = 0; j <= n; ++j) {
    c[j] = scale * b * f_kernel_t<Real>(n, i, j, al);
    b *= Real(j - n) * (top + Real(j)) / (Real(j + 1) * (al + Real(1 + j)));
  }
  return c;
}

// D^n_i(1) for all i: the constant coefficients c_0 = A_{ni} (alpha+1)_n/(n+1)! F(i,0),
// where F(i,0) = 2F1(-i, 1; -n-alpha; 1) = (n+alpha+1)/(n+alpha+1-i) by Chu-Vandermonde
// and the scale follows the A_{ni} ratio update. O(n).
std::vector<double> values_at_one(int n, const WeightParams& p) {
  using Ext = long double;
  const Ext al = p.alpha();
  const Ext be = p.beta();
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  Ext scale = shifted_power_scale<Ext>(n, 0, p);
  for (int i = 0; i <= n; ++i) {
    v[i] = static_cast<double>(scale * (Ext(n) + al + 1) / (Ext(n - i) + al + 1));
    scale *= -(al + Ext(n - i)) / (be + Ext(i + 1));
  }
  return v;
}

// D^n_i(x) at t = 1-x from the (1-x)^j representation, in extended precision.
double shifted_power_value(int n, int i, const WeightParams& p, double t) {
  using Ext = long double;
  const std::vector<Ext> c = shifted_power_coeffs<Ext>(n, i, p);
  Ext acc = 0;
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * Ext(t) + c[j];
  return static_cast<double>(acc);
}

}  // namespace

Poly coeffs_shifted_power(int n, int i, const WeightParams& p) {
  require_index(n, i, "coeffs_shifted_power");
  return Poly(Basis::ShiftedPower, shifted_power_coeffs<double>(n, i, p));
}

double bernstein_dual_pairing(int n, int i, int j, const WeightParams& p) {
  if (i < 0 || i > n || j < 0 || j > n) throw std::out_of_range("bernstein_dual_pairing: index outside 0..n");
  // x^i (1-x)^{n-i} folds into the weight; the c_k alternate and grow with n,
  // so coefficients and moments stay in long double.
  const std::vector<long double> c = shifted_power_coeffs<long double>(n, j, p);
  const WeightParams folded(p.alpha() + (n - i), p.beta() + i);
  return binomial(n, i) * static_cast<double>(integrate_power_exact<long double>(c, Basis::ShiftedPower, folded));
}

Poly coeffs_monomial_mirror(int n, int i, const WeightParams& p) {
  const Poly mirrored = coeffs_shifted_power(n, n - i, p.swapped());
  const auto c = mirrored.coeffs();
  return Poly(Basis::MonomialX, std::vector<double>(c.begin(), c.end()));
}

Poly dual_poly_near(int n, int i, const WeightParams& p, double x) {
  return x >= 0.5 ? coeffs_shifted_power(n, i, p) : coeffs_monomial_mirror(n, i, p);
}

DualTable eval_via_shifted_power(int n, const WeightParams& p, double x) {
  require_index(n, 0, "eval_via_shifted_power");
  DualTable t{n, p, x, std::vector<double>(static_cast<std::size_t>(n) + 1), DualMethod::ShiftedPowerForm};
  const WeightParams q = p.swapped();
  if (x == 1.0) {
    t.values = values_at_one(n, p);
  } else if (x == 0.0) {
    t.values = values_at_one(n, q);
    std::reverse(t.values.begin(), t.values.end());
  } else {
    for (int i = 0; i <= n; ++i)
      t.values[i] = x >= 0.5 ? shifted_power_value(n, i, p, 1.0 - x) : shifted_power_value(n, n - i, q, x);
  }
  return t;
}

DualTable elevate_degree(const DualTable& table) {
  const int n = table.n;
  const WeightParams& p = table.params;
  if (table.values.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("elevate_degree: table must hold n+1 values");
  const double r = jacobi_R(n + 1, p, table.x);
  DualTable out{n + 1, p, table.x, std::vector<double>(static_cast<std::size_t>(n) + 2), table.method};
  double c = dual_C(n, 0, p);
  const double inv = 1.0 / (n + 1.0);
  for (int i = 0; i <= n + 1; ++i) {
    out.values[i] = (1.0 - i * inv) * table.at(i) + (i * inv) * table.at(i - 1) + c * r;
    c *= -(p.alpha() + n - i + 1.0) / (p.beta() + i + 1.0);
  }
  return out;
}

DualTable eval_via_degree_elevation(int n, const WeightParams& p, double x) {
  require_index(n, 0, "eval_via_degree_elevation");
  DualTable t{0, p, x, {1.0 / p.bigK()}, DualMethod::DegreeElevation};
  for (int m = 0; m < n; ++m) t = elevate_degree(t);
  return t;
}

RecurrenceStencil recurrence_stencil(int n, int i, const WeightParams& p, double x) {
  const double al = p.alpha();
  const double be = p.beta();
  return RecurrenceStencil{
      i * (i + 1.0) * (n - i + al + 1.0) * (x - 1.0),
      (i + 1.0) * (n - i + 1.0) * ((i + be + 1.0) * (1.0 - x) + (n - i + al + 1.0) * x),
      -(n - i) * (n - i + 1.0) * (i + be + 1.0) * x,
  };
}

double recurrence_rhs(int n, int i, const WeightParams& p, double x, double a_ni, double r_a1, double r_b1) {
  return a_ni * ((i + 1.0) * (n + p.beta() + 1.0) * (1.0 - x) * r_a1 +
                 (n - i + 1.0) * (n + p.alpha() + 1.0) * x * r_b1);
}

RecurrenceReport eval_all_recurrence_report(int n, const WeightParams& p, double x) {
  require_index(n, 0, "eval_all_recurrence");
  RecurrenceReport rep;
  rep.table = DualTable{n, p, x, {}, DualMethod::RecurrenceOn_i};
  if (n == 0) {
    rep.table.values = {1.0 / p.bigK()};
    return rep;
  }
  if (std::min(x, 1.0 - x) < kEndpointThreshold) {
    rep.endpoint_regime = true;
    rep.table.values = eval_via_shifted_power(n, p, x).values;
    return rep;
  }

  const double r_a1 = jacobi_R<double>(n, p.alpha() + 1.0, p.beta(), x);
  const double r_b1 = jacobi_R<double>(n, p.alpha(), p.beta() + 1.0, x);
  const std::vector<double> a = dual_A_all(n, p);
  auto rhs = [&](int i) { return recurrence_rhs(n, i, p, x, a[i], r_a1, r_b1); };

  // Errors in the forward sweep are damped while i < x n and amplified
  // beyond it; the backward sweep behaves the other way round. The sweeps
  // therefore meet near i = x n and both produce indices lo..hi.
  const int hi = std::clamp(static_cast<int>(std::ceil(x * n)), 1, n);
  const int lo = std::clamp(static_cast<int>(std::floor(x * n)), 0, n - 1);
  std::vector<double> fwd(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> bwd(static_cast<std::size_t>(n) + 1, 0.0);
  fwd[0] = eval_via_short_jacobi(n, 0, p, x);
  fwd[1] = eval_via_short_jacobi(n, 1, p, x);
  for (int i = 1; i + 1 <= hi; ++i) {
    const RecurrenceStencil st = recurrence_stencil(n, i, p, x);
    const double inv = 1.0 / st.upper;
    fwd[i + 1] = rhs(i) * inv - (st.diag * inv) * fwd[i] - (st.lower * inv) * fwd[i - 1];
  }
  bwd[n] = eval_via_short_jacobi(n, n, p, x);
  bwd[n - 1] = eval_via_short_jacobi(n, n - 1, p, x);
  for (int i = n - 1; i - 1 >= lo; --i) {
    const RecurrenceStencil st = recurrence_stencil(n, i, p, x);
    const double inv = 1.0 / st.lower;
    bwd[i - 1] = rhs(i) * inv - (st.diag * inv) * bwd[i] - (st.upper * inv) * bwd[i + 1];
  }

  auto& v = rep.table.values;
  v.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[i] = i <= lo ? fwd[i] : bwd[i];

  double mismatch = 0.0;
  for (int i = lo; i <= hi; ++i) mismatch = std::max(mismatch, std::abs(fwd[i] - bwd[i]));
  const double scale = rep.table.max_abs();
  rep.midpoint_discrepancy = scale > 0.0 ? mismatch / scale : mismatch;
  if (rep.midpoint_discrepancy > kMidpointTolerance) {
    rep.fell_back = true;
    rep.table.values = eval_table_short_jacobi(n, p, x).values;
  }
  return rep;
}

DualTable eval_all_recurrence(int n, const WeightParams& p, double x) {
  return eval_all_recurrence_report(n, p, x).table;
}

double eval_combination(std::span<const double> d, const DualTable& table) {
  if (d.size() != table.values.size())
    throw std::invalid_argument("eval_combination: coefficient count must equal n+1");
  double s = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) s += d[i] * table.values[i];
  return s;
}

DualTable evaluate(DualMethod method, int n, const WeightParams& p, double x) {
  switch (method) {
    case DualMethod::JacobiHahn: return eval_via_jacobi_hahn(n, p, x);
    case DualMethod::ShortJacobi: return eval_table_short_jacobi(n, p, x);
    case DualMethod::ShiftedPowerForm: return eval_via_shifted_power(n, p, x);
    case DualMethod::DegreeElevation: return eval_via_degree_elevation(n, p, x);
    case DualMethod::RecurrenceOn_i: return eval_all_recurrence(n, p, x);
    case DualMethod::GramOracle: return dual_via_gram(n, p, x);
  }
  throw std::invalid_argument("evaluate: unknown method");
}

}  // namespace dualbern
