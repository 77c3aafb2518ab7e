#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "checks.hpp"
#include "dualbern/approx.hpp"

namespace dualbern::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<long, double, std::string>;
using Row = std::vector<Cell>;

// Flat tabular output rendered as CSV or as a JSON array of objects.
struct Output {
  std::vector<std::string> header;
  std::vector<Row> rows;
  std::optional<std::pair<std::string, double>> trailer;  // extra `key,value` line
};

std::string cell_text(const Cell& c) {
  if (auto* l = std::get_if<long>(&c)) return std::to_string(*l);
  if (auto* d = std::get_if<double>(&c)) return format_number(*d);
  return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (auto* l = std::get_if<long>(&c)) return *l;
  if (auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(format_number(*d));
  return std::get<std::string>(c);
}

std::string render(const Output& o, const std::string& format) {
  std::ostringstream s;
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const Row& r : o.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < o.header.size(); ++c) obj[o.header[c]] = cell_json(r[c]);
      arr.push_back(std::move(obj));
    }
    if (o.trailer) arr.push_back({{o.trailer->first, cell_json(o.trailer->second)}});
    s << arr.dump(2) << '\n';
    return s.str();
  }
  for (std::size_t c = 0; c < o.header.size(); ++c) s << (c ? "," : "") << o.header[c];
  s << '\n';
  for (const Row& r : o.rows) {
    for (std::size_t c = 0; c < r.size(); ++c) s << (c ? "," : "") << cell_text(r[c]);
    s << '\n';
  }
  if (o.trailer) s << o.trailer->first << ',' << format_number(o.trailer->second) << '\n';
  return s.str();
}

void emit(const Output& o, const std::string& format, const std::string& path, std::ostream& out) {
  const std::string text = render(o, format);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + path);
  f << text;
}

WeightParams make_params(double alpha, double beta) {
  try {
    return WeightParams(alpha, beta);
  } catch (const std::domain_error&) {
    throw UsageError("alpha and beta must be finite and > -1");
  }
}

DualMethod make_method(const std::string& name) {
  if (auto m = parse_method(name)) return *m;
  throw UsageError("unknown algorithm: " + name);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

constexpr int kMaxDegree = 100000;

struct Common {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::string format = "csv";
  std::string out_path;
};

void add_params(CLI::App* cmd, Common& c) {
  cmd->add_option("--alpha", c.alpha, "weight exponent of (1-x), > -1")->capture_default_str();
  cmd->add_option("--beta", c.beta, "weight exponent of x, > -1")->capture_default_str();
}

void add_output(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--out", c.out_path, "write to this file instead of stdout");
}

void add_degree(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "degree")->required()->check(CLI::Range(0, kMaxDegree));
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, end);
}

std::vector<DualTable> evaluate_grid(DualMethod method, int n, const WeightParams& p, int m, int threads) {
  if (m < 1) throw std::invalid_argument("evaluate_grid: M must be >= 1");
  const int points = m + 1;
  std::vector<DualTable> out(static_cast<std::size_t>(points));
  auto work = [&](int lo, int hi) {
    for (int k = lo; k < hi; ++k) out[k] = evaluate(method, n, p, static_cast<double>(k) / m);
  };
  threads = std::clamp(threads, 1, points);
  if (threads == 1) {
    work(0, points);
    return out;
  }
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(work, points * t / threads, points * (t + 1) / threads);
  pool.clear();
  return out;
}

std::vector<BenchRecord> run_bench(std::span<const int> ns, const WeightParams& p, int m, int repeats) {
  if (repeats < 1) throw std::invalid_argument("run_bench: repeats must be >= 1");
  using Clock = std::chrono::steady_clock;
  const DualMethod methods[] = {DualMethod::DegreeElevation, DualMethod::RecurrenceOn_i};
  std::vector<BenchRecord> records;
  for (int n : ns) {
    std::vector<DualTable> results[2];
    double medians[2];
    for (int k = 0; k < 2; ++k) {
      results[k] = evaluate_grid(methods[k], n, p, m);  // warm-up, also the values compared below
      std::vector<double> times;
      volatile double sink = 0.0;
      for (int r = 0; r < repeats; ++r) {
        const auto t0 = Clock::now();
        for (int j = 0; j <= m; ++j) sink = sink + evaluate(methods[k], n, p, static_cast<double>(j) / m).values[0];
        times.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
      }
      std::sort(times.begin(), times.end());
      medians[k] = times.size() % 2 ? times[times.size() / 2]
                                    : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);
    }
    double dev = 0.0;
    for (int j = 0; j <= m; ++j) {
      const DualTable& a = results[0][j];
      const DualTable& b = results[1][j];
      const double scale = std::max({a.max_abs(), b.max_abs(), 1e-300});
      for (int i = 0; i <= n; ++i) dev = std::max(dev, std::abs(a.at(i) - b.at(i)) / scale);
    }
    for (int k = 0; k < 2; ++k)
      records.push_back({std::string(to_string(methods[k])), n, m, repeats, medians[k], dev});
  }
  return records;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual Bernstein polynomials: evaluation, identity checks, benchmarks, least squares", "dualbern"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand help for all subcommands");

  Common c;
  std::optional<double> x;
  std::optional<int> index;
  std::string algo = "RecurrenceOn_i";
  int grid = 100;
  int threads = 1;
  std::vector<int> n_list = {10, 20, 40, 80};
  int repeats = 5;
  std::string suite = "all";
  int n_max = 8;
  std::optional<double> check_alpha, check_beta;
  std::string f_name;
  std::vector<double> poly_coeffs;
  std::optional<int> quad_m;

  auto* eval = app.add_subcommand("eval", "D^n_i(x) at one point, one index or the whole table");
  add_degree(eval, c);
  add_params(eval, c);
  eval->add_option("--x", x, "evaluation point")->required();
  eval->add_option("--i", index, "index 0..n (default: all)");
  eval->add_option("--algo", algo, "JacobiHahn, ShortJacobi, ShiftedPowerForm, DegreeElevation, RecurrenceOn_i, GramOracle")
      ->capture_default_str();
  add_output(eval, c);

  auto* table = app.add_subcommand("table", "tables at x_k = k/M, k = 0..M");
  add_degree(table, c);
  add_params(table, c);
  table->add_option("--M,--grid", grid, "grid size M >= 1")->capture_default_str();
  table->add_option("--algo", algo, "evaluation algorithm")->capture_default_str();
  table->add_option("--threads", threads, "worker threads")->capture_default_str();
  add_output(table, c);

  auto* bench = app.add_subcommand("bench", "degree elevation vs recurrence timing");
  bench->add_option("--n-list", n_list, "degrees")->delimiter(',')->capture_default_str();
  add_params(bench, c);
  bench->add_option("--M,--grid", grid, "grid size M >= 1")->capture_default_str();
  bench->add_option("--repeats", repeats, "timed repeats, >= 3")->capture_default_str();
  add_output(bench, c);

  auto* check = app.add_subcommand("check", "identity residual sweeps");
  check->add_option("--suite", suite, "all, duality, symmetry, diffrec, ode, recurrence, lemma")->capture_default_str();
  check->add_option("--n-max", n_max, "largest degree")->capture_default_str();
  check->add_option("--alpha", check_alpha, "single parameter set instead of the standard three");
  check->add_option("--beta", check_beta, "single parameter set instead of the standard three");
  add_output(check, c);

  auto* approx = app.add_subcommand("approx", "weighted least-squares Bezier approximation");
  approx->add_option("--f", f_name, "const1, x, x2, exp, sin_pi, smooth_step, poly")->required();
  approx->add_option("--coeffs", poly_coeffs, "monomial coefficients for --f poly")->delimiter(',');
  add_degree(approx, c);
  add_params(approx, c);
  approx->add_option("--m", quad_m, "quadrature nodes (default n+16)");
  add_output(approx, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*eval) {
      const WeightParams p = make_params(c.alpha, c.beta);
      require(std::isfinite(*x), "x must be finite");
      require(!index || (*index >= 0 && *index <= c.n), "i must satisfy 0 <= i <= n");
      const DualTable t = evaluate(make_method(algo), c.n, p, *x);
      Output o{{"i", "value"}, {}, {}};
      for (int i = 0; i <= c.n; ++i)
        if (!index || *index == i) o.rows.push_back({long{i}, t.at(i)});
      emit(o, c.format, c.out_path, out);
      return kExitOk;
    }
    if (*table) {
      const WeightParams p = make_params(c.alpha, c.beta);
      require(grid >= 1, "M must be >= 1");
      require(threads >= 1, "threads must be >= 1");
      const auto tables = evaluate_grid(make_method(algo), c.n, p, grid, threads);
      Output o{{"x", "i", "value"}, {}, {}};
      for (const DualTable& t : tables)
        for (int i = 0; i <= c.n; ++i) o.rows.push_back({t.x, long{i}, t.at(i)});
      emit(o, c.format, c.out_path, out);
      return kExitOk;
    }
    if (*bench) {
      const WeightParams p = make_params(c.alpha, c.beta);
      require(repeats >= 3, "repeats must be >= 3");
      require(grid >= 1, "M must be >= 1");
      require(!n_list.empty(), "n-list must not be empty");
      for (int n : n_list) require(n >= 0 && n <= kMaxDegree, "degrees in n-list must be in 0.." + std::to_string(kMaxDegree));
      Output o{{"method", "n", "M", "repeats", "wall_seconds", "max_cross_dev"}, {}, {}};
      for (const auto& r : run_bench(n_list, p, grid, repeats))
        o.rows.push_back({r.method, long{r.n}, long{r.grid_m}, long{r.repeats}, r.wall_seconds, r.max_cross_dev});
      emit(o, c.format, c.out_path, out);
      return kExitOk;
    }
    if (*check) {
      require(checks::is_suite(suite), "unknown suite: " + suite);
      require(n_max >= 0 && n_max <= 40, "n-max must be in 0..40");
      require(check_alpha.has_value() == check_beta.has_value(), "--alpha and --beta go together");
      checks::SuiteOptions so;
      so.n_max = n_max;
      if (check_alpha) so.params = {make_params(*check_alpha, *check_beta)};
      const auto results = checks::run_suite(suite, so);
      Output o{{"suite", "identity", "worst_residual", "tolerance", "status"}, {}, {}};
      bool ok = true;
      for (const auto& r : results) {
        ok = ok && r.passed();
        o.rows.push_back({r.suite, r.identity, r.worst, r.tolerance, std::string(r.passed() ? "pass" : "FAIL")});
      }
      emit(o, c.format, c.out_path, out);
      return ok ? kExitOk : kExitFailure;
    }
    if (*approx) {
      const WeightParams p = make_params(c.alpha, c.beta);
      require(f_name != "poly" || !poly_coeffs.empty(), "--f poly needs --coeffs");
      const auto f = builtin_integrand(f_name, poly_coeffs);
      require(f.has_value(), "unknown function: " + f_name);
      const int m = quad_m.value_or(default_quad_nodes(c.n));
      require(m >= c.n + 1, "m must be >= n+1");
      const LsqResult r = lsq_bezier(*f, c.n, p, m);
      Output o{{"k", "I_k"}, {}, std::pair<std::string, double>{"error", r.l2_error}};
      for (int k = 0; k <= c.n; ++k) o.rows.push_back({long{k}, r.coeffs[k]});
      emit(o, c.format, c.out_path, out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dualbern::cli
