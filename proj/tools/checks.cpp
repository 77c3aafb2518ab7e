#include "checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "dualbern/dual.hpp"
#include "dualbern/relations.hpp"

namespace dualbern::checks {
namespace {

constexpr double kIdentityTol = 1e-8;
constexpr double kCompositionTol = 1e-10;
constexpr double kPairingTol = 1e-6;
constexpr double kSymmetryTol = 1e-9;
constexpr double kOracleTol = 1e-9;
constexpr double kOracleIllTol = 1e-5;
constexpr int kOracleWellMax = 8;
constexpr int kOracleMax = 10;
constexpr int kCompositionMax = 8;

constexpr std::array<std::string_view, 7> kSuites = {"all", "duality", "symmetry", "diffrec",
                                                     "ode", "recurrence", "lemma"};

class Tracker {
 public:
  Tracker(std::string suite, std::string identity, double tol) {
    r_.suite = std::move(suite);
    r_.identity = std::move(identity);
    r_.tolerance = tol;
  }
  void add(double residual) {
    // NaN counts as a failure.
    r_.worst = std::isnan(residual) ? INFINITY : std::max(r_.worst, std::abs(residual));
    ++r_.samples;
  }
  IdentityResult result() const { return r_; }

 private:
  IdentityResult r_;
};

using PointResidual = std::function<double(int n, int i, const WeightParams& p, double x)>;

IdentityResult sweep_points(const std::string& suite, const std::string& name, double tol,
                            const SuiteOptions& o, const PointResidual& f) {
  Tracker t(suite, name, tol);
  for (const auto& p : o.params)
    for (int n = 0; n <= o.n_max; ++n)
      for (int i = 0; i <= n; ++i)
        for (double x : o.xs) t.add(f(n, i, p, x));
  return t.result();
}

double relative_gap(const DualTable& a, const DualTable& b) {
  const double scale = std::max({a.max_abs(), b.max_abs(), 1e-300});
  double worst = 0.0;
  for (int i = 0; i <= a.n; ++i) worst = std::max(worst, std::abs(a.at(i) - b.at(i)) / scale);
  return worst;
}

std::vector<IdentityResult> duality(const SuiteOptions& o) {
  std::vector<IdentityResult> out;
  Tracker t("duality", "bernstein_pairing", kPairingTol);
  for (const auto& p : o.params)
    for (int n = 0; n <= o.n_max; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) t.add(bernstein_dual_pairing(n, i, j, p) - (i == j ? 1.0 : 0.0));
  out.push_back(t.result());
  out.push_back(oracle_sweep(0, std::min(o.n_max, kOracleWellMax), o.params, kOracleTol));
  if (o.n_max > kOracleWellMax) {
    auto r = oracle_sweep(kOracleWellMax + 1, std::min(o.n_max, kOracleMax), o.params, kOracleIllTol);
    r.identity = "gram_oracle_ill_conditioned";
    out.push_back(r);
  }
  return out;
}

std::vector<IdentityResult> symmetry(const SuiteOptions& o) {
  std::vector<IdentityResult> out;
  const int m = 100;
  for (DualMethod method : kAllMethods) {
    Tracker t("symmetry", "mirror_" + std::string(to_string(method)), kSymmetryTol);
    for (const auto& p : o.params)
      for (int n = 0; n <= o.n_max; ++n)
        for (int k = 0; k <= m; ++k) {
          const double x = static_cast<double>(k) / m;
          const double y = static_cast<double>(m - k) / m;
          const DualTable a = evaluate(method, n, p, x);
          DualTable b = evaluate(method, n, p.swapped(), y);
          std::reverse(b.values.begin(), b.values.end());
          t.add(relative_gap(a, b));
        }
    out.push_back(t.result());
  }
  return out;
}

std::vector<IdentityResult> diffrec(const SuiteOptions& o) {
  std::vector<IdentityResult> out;
  out.push_back(sweep_points("diffrec", "diffrec_1", kIdentityTol, o, residual_diffrec_1));
  out.push_back(sweep_points("diffrec", "diffrec_2", kIdentityTol, o, residual_diffrec_2));
  out.push_back(sweep_points("diffrec", "diffrec_3", kIdentityTol, o, residual_diffrec_3));
  out.push_back(sweep_points("diffrec", "intertwining", kIdentityTol, o, residual_intertwining));
  out.push_back(sweep_points("diffrec", "jacobi_contiguity", kIdentityTol, o,
                             [](int n, int, const WeightParams& p, double x) {
                               return residual_jacobi_contiguity(n, p, x);
                             }));
  return out;
}

std::vector<IdentityResult> ode(const SuiteOptions& o) {
  std::vector<IdentityResult> out;
  out.push_back(sweep_points("ode", "ode2", kIdentityTol, o, residual_ode2));
  out.push_back(sweep_points("ode", "ode4", kIdentityTol, o, residual_ode4));
  Tracker t("ode", "ode4_composition", kCompositionTol);
  for (const auto& p : o.params)
    for (int n = 0; n <= std::min(o.n_max, kCompositionMax); ++n)
      for (int i = 0; i <= n; ++i) t.add(ode4_composition_mismatch(n, i, p));
  out.push_back(t.result());
  return out;
}

std::vector<IdentityResult> recurrence(const SuiteOptions& o) {
  std::vector<IdentityResult> out;
  out.push_back(sweep_points("recurrence", "rec_nonhomog", kIdentityTol, o,
                             [](int n, int i, const WeightParams& p, double x) {
                               return residual_rec_nonhomog(n, i, p, x);
                             }));
  out.push_back(sweep_points("recurrence", "rec4", kIdentityTol, o,
                             [](int n, int i, const WeightParams& p, double x) {
                               return residual_rec4(n, i, p, x);
                             }));
  out.push_back(sweep_points("recurrence", "rhs_linear_in_i", kIdentityTol, o, residual_h_linear));
  SuiteOptions capped = o;
  capped.n_max = std::min(o.n_max, kCompositionMax);
  out.push_back(sweep_points("recurrence", "rec4_composition", kCompositionTol, capped, rec4_composition_mismatch));
  return out;
}

std::vector<IdentityResult> lemma(const SuiteOptions& o) {
  Tracker t("lemma", "f_kernel_recurrence", kIdentityTol);
  for (const auto& p : o.params)
    for (int n = 0; n <= o.n_max; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) t.add(residual_f_lemma(n, i, j, p.alpha()));
  return {t.result()};
}

}  // namespace

std::vector<WeightParams> standard_params() { return {{0.0, 0.0}, {-0.5, -0.5}, {-0.33, 5.66}}; }

std::vector<double> standard_points() { return {0.1, 0.25, 0.5, 0.75, 0.9}; }

std::vector<double> uniform_grid(int m) {
  std::vector<double> xs(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) xs[k] = static_cast<double>(k) / m;
  return xs;
}

std::span<const std::string_view> suite_names() { return kSuites; }

bool is_suite(std::string_view name) { return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end(); }

IdentityResult oracle_sweep(int n_lo, int n_hi, std::span<const WeightParams> params, double tolerance) {
  Tracker t("duality", "gram_oracle", tolerance);
  const std::vector<double> grid = uniform_grid(100);
  for (const auto& p : params)
    for (int n = n_lo; n <= n_hi; ++n) {
      const GramOracle oracle(n, p);
      for (double x : grid) {
        const DualTable ref = oracle.eval(x);
        for (DualMethod m : kAllMethods) t.add(relative_gap(evaluate(m, n, p, x), ref));
      }
    }
  return t.result();
}

std::vector<IdentityResult> run_suite(std::string_view name, const SuiteOptions& options) {
  SuiteOptions o = options;
  if (o.params.empty()) o.params = standard_params();
  if (o.xs.empty()) o.xs = standard_points();
  if (o.n_max < 0) throw std::invalid_argument("run_suite: n_max must be nonnegative");

  if (name == "duality") return duality(o);
  if (name == "symmetry") return symmetry(o);
  if (name == "diffrec") return diffrec(o);
  if (name == "ode") return ode(o);
  if (name == "recurrence") return recurrence(o);
  if (name == "lemma") return lemma(o);
  if (name == "all") {
    std::vector<IdentityResult> all;
    for (auto s : std::span(kSuites).subspan(1)) {
      auto part = run_suite(s, o);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace dualbern::checks
