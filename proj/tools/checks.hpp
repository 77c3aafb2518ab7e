#pragma once

// Residual sweeps behind `dualbern check`. Each identity reports the worst
// scaled residual over its sweep and the tolerance it is held to.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualbern/specfun.hpp"

namespace dualbern::checks {

struct IdentityResult {
  std::string suite;
  std::string identity;
  double worst = 0.0;
  double tolerance = 0.0;
  long samples = 0;

  bool passed() const noexcept { return worst <= tolerance; }
};

struct SuiteOptions {
  int n_max = 8;
  std::vector<WeightParams> params;  ///< empty means standard_params()
  std::vector<double> xs;            ///< empty means standard_points()
};

/// (0,0), (-1/2,-1/2), (-0.33,5.66).
std::vector<WeightParams> standard_params();
/// 0.1, 0.25, 0.5, 0.75, 0.9.
std::vector<double> standard_points();
/// x_k = k/M, k = 0..M.
std::vector<double> uniform_grid(int m);

std::span<const std::string_view> suite_names();
bool is_suite(std::string_view name);

/// Runs one suite ("all" runs every suite in order).
/// Throws std::invalid_argument for an unknown name.
std::vector<IdentityResult> run_suite(std::string_view name, const SuiteOptions& options);

/// Worst relative deviation of every production method from the Gram
/// oracle over n in [n_lo, n_hi], x on the 101-point grid.
IdentityResult oracle_sweep(int n_lo, int n_hi, std::span<const WeightParams> params, double tolerance);

}  // namespace dualbern::checks
