#pragma once

// dualbern command line: eval, table, bench, check, approx.
// Exit codes: 0 success, 1 check failure or numerical error, 2 usage error.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dualbern/dual.hpp"

namespace dualbern::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Shortest decimal string that parses back to the same double.
std::string format_number(double v);

/// Tables at x_k = k/M, k = 0..M. Work is split across `threads` workers by
/// contiguous blocks of x; the result does not depend on the worker count.
std::vector<DualTable> evaluate_grid(DualMethod method, int n, const WeightParams& p, int m, int threads = 1);

struct BenchRecord {
  std::string method;
  int n = 0;
  int grid_m = 0;
  int repeats = 0;
  double wall_seconds = 0.0;  ///< median over repeats, warm-up excluded
  double max_cross_dev = 0.0;
};

/// Times full-grid evaluation by DegreeElevation and RecurrenceOn_i for each
/// n, single-threaded. Two records per n. Requires repeats >= 1.
std::vector<BenchRecord> run_bench(std::span<const int> ns, const WeightParams& p, int m, int repeats);

/// Entry point. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dualbern::cli
