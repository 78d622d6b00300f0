#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "trigspec/alias_analysis.hpp"
#include "trigspec/errors.hpp"
#include "trigspec/filon_oracle.hpp"
#include "trigspec/io.hpp"
#include "trigspec/sampling.hpp"
#include "trigspec/signal_model.hpp"
#include "trigspec/spline_kernel.hpp"
#include "trigspec/trig_spline.hpp"

namespace trigspec::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string signal_path;
  std::string inline_json;
  int n = 0;
  std::string r_list;
  std::string variant = "abs-sinc";
  double tail_tol = 1e-12;
  long long j_max = 0;
  int eval_grid = 0;
  std::string out;
  std::string format = "csv";
  std::string bound = "coeff";
  double bound_scale = 1.0;
};

struct Output {
  fs::path path;  // empty: the primary output stream
  std::string text;
};

struct Result {
  int code = kOk;
  std::vector<Output> outputs;
};

AnalyticSignal load_signal(const Options& o) {
  if (!o.signal_path.empty() && !o.inline_json.empty()) {
    throw DomainError("give either --signal or --inline, not both");
  }
  if (!o.inline_json.empty()) return parse_signal_json(o.inline_json);
  if (!o.signal_path.empty()) return parse_signal_json(read_text_file(o.signal_path));
  throw DomainError("a signal is required (--signal PATH or --inline JSON)");
}

UniformGrid require_grid(const Options& o) {
  if (o.n < 1) throw DomainError("--n must be given and >= 1");
  return UniformGrid(o.n);
}

std::vector<int> parse_r_list(const std::string& text, const std::string& fallback) {
  const std::string src = text.empty() ? fallback : text;
  std::vector<int> out;
  std::stringstream ss(src);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("--r expects an integer or a comma list, got '" + src + "'");
    }
    if (used != item.size()) throw DomainError("--r expects an integer or a comma list, got '" + src + "'");
    out.push_back(value);
  }
  if (out.empty()) throw DomainError("--r is empty");
  return out;
}

int single_r(const Options& o, int fallback) {
  const auto rs = parse_r_list(o.r_list, std::to_string(fallback));
  if (rs.size() != 1) throw DomainError("this subcommand takes a single --r value");
  return rs.front();
}

KernelConfig kernel_config(const Options& o, int r, const UniformGrid& grid) {
  KernelConfig cfg;
  cfg.r = r;
  cfg.grid = grid;
  cfg.variant = parse_variant(o.variant);
  cfg.tail_tol = o.tail_tol;
  validate(cfg);
  return cfg;
}

std::string render(const CsvTable& table, const Options& o) {
  return o.format == "json" ? table.json() : table.str();
}

fs::path sibling(const std::string& out, const std::string& suffix) {
  const fs::path p(out);
  return p.parent_path() / (p.stem().string() + suffix);
}

double max_abs_diff(CoeffPair x, CoeffPair y) { return std::max(std::abs(x.a - y.a), std::abs(x.b - y.b)); }

Result cmd_gen_signal(const Options& o) {
  const AnalyticSignal signal = load_signal(o);
  if (o.format == "json") return {kOk, {{{}, signal_to_json(signal)}}};
  const UniformGrid grid = require_grid(o);
  const SampleVector s = sample(signal, grid);
  CsvTable table({"j", "t", "f"});
  for (int j = 0; j < grid.size(); ++j) table.add(j + 1, grid.node(j), s.values[j]);
  return {kOk, {{{}, table.str()}}};
}

Result cmd_dft(const Options& o) {
  const AnalyticSignal signal = load_signal(o);
  const UniformGrid grid = require_grid(o);
  const DiscreteSpectrum spec = discrete_coeffs(sample(signal, grid));
  CsvTable table({"k", "a", "b"});
  table.add(0, spec.a0, 0.0);
  for (int k = 1; k <= grid.n(); ++k) table.add(k, spec.a[k - 1], spec.b[k - 1]);
  return {kOk, {{{}, render(table, o)}}};
}

Result cmd_spline(const Options& o) {
  const AnalyticSignal signal = load_signal(o);
  const UniformGrid grid = require_grid(o);
  const KernelConfig cfg = kernel_config(o, single_r(o, 3), grid);
  if (o.out.empty() && o.eval_grid > 0) throw DomainError("--eval-grid needs --out");
  if (o.eval_grid < 0) throw DomainError("--eval-grid must be >= 0");
  const long long j_max = o.j_max > 0 ? o.j_max : 4LL * grid.size();

  const TrigSpline spline = build_spline(sample(signal, grid), cfg);
  Result res;
  res.outputs.push_back({{}, spline_to_json(spline)});
  if (o.out.empty()) return res;

  CsvTable unfolded({"j", "a_hat", "b_hat", "a_true", "b_true", "abs_err_a", "abs_err_b"});
  for (const auto& row : unfolded_spectrum(spline, j_max)) {
    const CoeffPair truth = true_coeff(signal, static_cast<int>(row.j));
    unfolded.add(row.j, row.a_hat, row.b_hat, truth.a, truth.b, std::abs(row.a_hat - truth.a),
                 std::abs(row.b_hat - truth.b));
  }
  res.outputs.push_back({sibling(o.out, "_unfolded.csv"), unfolded.str()});

  if (o.eval_grid > 0) {
    CsvTable eval_table({"t", "spline", "signal", "abs_err"});
    const double h = 2.0 * std::numbers::pi / o.eval_grid;
    for (int i = 0; i < o.eval_grid; ++i) {
      const double t = h * i;
      const double s = spline(t);
      const double f = signal(t);
      eval_table.add(t, s, f, std::abs(s - f));
    }
    res.outputs.push_back({sibling(o.out, "_eval.csv"), eval_table.str()});
  }
  return res;
}

Result cmd_response(const Options& o) {
  const UniformGrid grid = require_grid(o);
  const long long j_max = o.j_max != 0 ? o.j_max : grid.n();
  CsvTable table({"r", "j", "k_class", "sigma", "H", "alpha"});
  for (int r : parse_r_list(o.r_list, "1,3,10")) {
    const KernelConfig cfg = kernel_config(o, r, grid);
    const FilterTable ft = filter_response(cfg, j_max);
    for (long long j = 1; j <= j_max; ++j) {
      const AliasClass cls = alias_class(j, grid.size());
      const double h = cls.k == 0 ? ft.H_dc : ft.H[cls.k - 1];
      table.add(r, j, cls.k, sigma(j, cfg), h, ft.alpha_at(j));
    }
  }
  return {kOk, {{{}, render(table, o)}}};
}

Result cmd_alias(const Options& o) {
  const AnalyticSignal signal = load_signal(o);
  const UniformGrid grid = require_grid(o);
  const DiscreteSpectrum spec = discrete_coeffs(sample(signal, grid));
  double scale = std::abs(spec.a0);
  for (int k = 1; k <= grid.n(); ++k) scale = std::max({scale, std::abs(spec.a[k - 1]), std::abs(spec.b[k - 1])});
  const double identity_tol = 1e-10 * std::max(1.0, scale);

  CsvTable table({"k", "a_star_fold", "b_star_fold", "a_star_dft", "b_star_dft", "abs_diff_a", "abs_diff_b",
                  "bound8"});
  bool ok = true;
  for (int k = 0; k <= grid.n(); ++k) {
    const FoldReport fold = folded_coeffs(signal, grid, k, o.tail_tol);
    const CoeffPair dft = k == 0 ? CoeffPair{spec.a0, 0.0} : CoeffPair{spec.a[k - 1], spec.b[k - 1]};
    const double da = std::abs(fold.folded_value_a - dft.a);
    const double db = std::abs(fold.folded_value_b - dft.b);
    const double bound = k == 0 ? dc_aliasing_error_bound(grid, signal.smoothness(), o.tail_tol)
                                : aliasing_error_bound(k, grid, signal.smoothness(), o.tail_tol);
    const double alias_err = max_abs_diff(dft, true_coeff(signal, k));
    const double slack = identity_tol + fold.tail_bound;
    ok = ok && da <= slack && db <= slack && alias_err <= bound * (1.0 + 1e-9) + identity_tol;
    table.add(k, fold.folded_value_a, fold.folded_value_b, dft.a, dft.b, da, db, bound);
  }
  return {ok ? kOk : kViolation, {{{}, render(table, o)}}};
}

Result cmd_bounds(const Options& o) {
  const AnalyticSignal signal = load_signal(o);
  const UniformGrid grid = require_grid(o);
  if (!(o.bound_scale > 0.0)) throw DomainError("--bound-scale must be > 0");
  const long long j_max = o.j_max > 0 ? o.j_max : 4LL * grid.size();
  if (j_max > std::numeric_limits<int>::max()) throw DomainError("--j-max is too large");

  CsvTable table({"k", "measured", "bound", "holds"});
  bool ok = true;
  // Bounds built on an estimated sup norm or variation get 10% slack.
  auto add = [&](long long k, double measured, double bound, double slack) {
    bound *= o.bound_scale;
    const bool holds = measured <= bound * (1.0 + slack) + 1e-15;
    ok = ok && holds;
    table.add(k, measured, bound, holds);
  };

  if (o.bound == "coeff") {
    for (int k = 1; k <= j_max; ++k) {
      add(k, max_abs_diff(true_coeff(signal, k), {}), coefficient_bound(signal.smoothness(), k), 1e-9);
    }
  } else if (o.bound == "alias") {
    const DiscreteSpectrum spec = discrete_coeffs(sample(signal, grid));
    for (int k = 1; k <= grid.n(); ++k) {
      const double measured = max_abs_diff({spec.a[k - 1], spec.b[k - 1]}, true_coeff(signal, k));
      add(k, measured, aliasing_error_bound(k, grid, signal.smoothness(), o.tail_tol), 1e-9);
    }
  } else if (o.bound == "time") {
    const double measured =
        sup_distance([&](double t) { return signal(t); }, [&](double t) { return band_component(signal, grid.n(), t); });
    add(grid.n(), measured, time_domain_bound(grid.n(), signal.smoothness()), 1e-9);
  } else if (o.bound == "cnorm" || o.bound == "refined") {
    const KernelConfig cfg = kernel_config(o, single_r(o, 3), grid);
    const TrigSpline spline = build_spline(sample(signal, grid), cfg);
    double sup = 0.0;
    double variation = 0.0;
    int q = 0;
    if (o.bound == "cnorm") {
      sup = sup_distance([&](double t) { return signal(t); }, [&](double t) { return spline(t); });
    } else {
      q = std::min(cfg.r, signal.smoothness().r);
      const FourierSeries dphi = truncated_series(spline).derivative(q);
      variation = total_variation([&](double t) { return eval_derivative(signal, q, t) - dphi(t); });
    }
    for (int k = 1; k <= j_max; ++k) {
      const double measured = max_abs_diff(true_coeff(signal, k), spline_fourier_coeff(spline, k));
      const double bound = o.bound == "cnorm" ? cnorm_error_bound(sup) : refined_error_bound(k, q, variation);
      add(k, measured, bound, 0.1);
    }
  } else {
    throw DomainError("unknown --bound '" + o.bound + "' (coeff, alias, time, cnorm, refined)");
  }
  return {ok ? kOk : kViolation, {{{}, render(table, o)}}};
}

void add_signal_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--signal", o.signal_path, "Signal JSON file");
  cmd->add_option("--inline", o.inline_json, "Signal JSON text");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Trigonometric spline interpolation and aliasing analysis", "trigspec"};
  app.require_subcommand(1);
  app.add_option("--out", o.out, "Output file (default: standard output)");
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--n", o.n, "Grid parameter n (N = 2n+1 nodes)");
  app.add_option("--tail-tol", o.tail_tol, "Series tail tolerance");
  app.fallthrough();

  auto* gen = app.add_subcommand("gen-signal", "Normalize a signal (json) or sample it (csv)");
  add_signal_options(gen, o);
  auto* dft = app.add_subcommand("dft", "Discrete Fourier coefficients of the samples");
  add_signal_options(dft, o);
  auto* spl = app.add_subcommand("spline", "Build a spline; writes JSON and the unfolded spectrum");
  add_signal_options(spl, o);
  spl->add_option("--r", o.r_list, "Spline order");
  spl->add_option("--variant", o.variant, "sinc, abs-sinc or inv-power");
  spl->add_option("--j-max", o.j_max, "Last row of the unfolded spectrum (default 4N)");
  spl->add_option("--eval-grid", o.eval_grid, "Dense evaluation points");
  auto* resp = app.add_subcommand("response", "Filter response alpha(r,j)");
  resp->add_option("--r", o.r_list, "Comma list of orders (default 1,3,10)");
  resp->add_option("--variant", o.variant, "sinc, abs-sinc or inv-power");
  resp->add_option("--j-max", o.j_max, "Last j (default n)");
  auto* alias = app.add_subcommand("alias", "Fold identity and aliasing bound per class");
  add_signal_options(alias, o);
  auto* bounds = app.add_subcommand("bounds", "Check an error bound row by row");
  add_signal_options(bounds, o);
  bounds->add_option("--bound", o.bound, "coeff, alias, time, cnorm or refined");
  bounds->add_option("--bound-scale", o.bound_scale, "Multiplier applied to the bound column");
  bounds->add_option("--r", o.r_list, "Spline order for cnorm/refined");
  bounds->add_option("--variant", o.variant, "sinc, abs-sinc or inv-power");
  bounds->add_option("--j-max", o.j_max, "Last k (default 4N)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  Result result;
  try {
    if (*gen) result = cmd_gen_signal(o);
    else if (*dft) result = cmd_dft(o);
    else if (*spl) result = cmd_spline(o);
    else if (*resp) result = cmd_response(o);
    else if (*alias) result = cmd_alias(o);
    else result = cmd_bounds(o);

    for (const auto& output : result.outputs) {
      if (!output.path.empty()) write_text_file(output.path, output.text);
      else if (!o.out.empty()) write_text_file(o.out, output.text);
      else out << output.text;
    }
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::logic_error& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalError;
  }
  return result.code;
}

}  // namespace trigspec::cli
