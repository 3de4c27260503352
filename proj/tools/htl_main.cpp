// htl: Hilbert tensor operators on the unit disk.
//
// Subcommands expose the library pipeline end to end: apply the operator by
// any of its three evaluation paths, estimate Bergman/Hardy norms, print the
// closed-form norm constants, verify the operator and slice bounds on
// concrete inputs, probe the operator norm from below by pattern search, and
// sweep the cross-path equivalence over a z-grid. Every output embeds the
// fully resolved configuration; identical configurations reproduce identical
// bytes (the timestamp field aside).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "htl/experiments.hpp"
#include "htl/report_io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitAnomaly = 4;

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Inline JSON array or a path to a file holding one.
htl::PowerSeries load_series(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec.front() != '[') {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open series file: " + spec);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return htl::parse_series_json(text);
}

htl::cx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return htl::cx{std::stod(text), 0.0};
    return htl::cx{std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse complex number: " + text);
  }
}

int thread_cap() {
  if (const char* env = std::getenv("HTL_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) return cap;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

json wrap(const char* command, json config, json result) {
  config["format"] = "json";
  return json{{"command", command},
              {"config", std::move(config)},
              {"result", std::move(result)},
              {"timestamp", timestamp_utc()}};
}

json complex_json(htl::cx v) { return json::array({v.real(), v.imag()}); }

json series_json(const htl::PowerSeries& f) {
  json arr = json::array();
  for (std::size_t k = 0; k < f.size(); ++k) arr.push_back(complex_json(f[k]));
  return arr;
}

struct CommonOut {
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOut& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", common.out_path, "Write output to this path instead of stdout");
}

// ---------------------------------------------------------------- apply ----

struct ApplyArgs {
  std::string coeffs;
  int m = 2;
  int K = 16;
  std::string paths = "series";
  std::vector<std::string> z_texts;
  int order = 16;
  int levels = 40;
  CommonOut common;
};

int run_apply(const ApplyArgs& args) {
  const htl::PowerSeries f = load_series(args.coeffs);
  const htl::TensorOrder m(args.m);
  if (args.K < 1) throw std::domain_error("apply: --K >= 1 required");

  const htl::OperatorOutput out = htl::apply_series(f, m, static_cast<std::size_t>(args.K));
  const htl::QuadratureRule rule = htl::singular_line_rule(args.order, args.levels);

  json points = json::array();
  double max_dev = 0.0;
  for (const std::string& z_text : args.z_texts) {
    const htl::cx z = parse_complex(z_text);
    // tail-safe length for evaluating the series path at this radius
    const std::size_t safe = htl::output_truncation(std::max(std::abs(z), 0.1), 1e-12);
    const htl::OperatorOutput dense = htl::apply_series(f, m, safe);

    json row{{"z", complex_json(z)}};
    std::vector<htl::cx> values;
    if (args.paths == "series" || args.paths == "all") {
      values.push_back(htl::evaluate(dense.series, z));
      row["series"] = complex_json(values.back());
    }
    if (args.paths == "integral" || args.paths == "all") {
      values.push_back(htl::apply_integral(f, m, z, rule));
      row["integral"] = complex_json(values.back());
    }
    if (args.paths == "mobius" || args.paths == "all") {
      values.push_back(htl::apply_mobius(f, m, z, rule));
      row["mobius"] = complex_json(values.back());
    }
    double dev = 0.0;
    for (std::size_t a = 0; a < values.size(); ++a)
      for (std::size_t b = a + 1; b < values.size(); ++b)
        dev = std::max(dev, std::abs(values[a] - values[b]));
    row["max_pairwise_deviation"] = dev;
    max_dev = std::max(max_dev, dev);
    points.push_back(std::move(row));
  }

  json config{{"coeffs", series_json(f)}, {"m", args.m},         {"K", args.K},
              {"paths", args.paths},      {"order", args.order}, {"levels", args.levels}};
  json result{{"coefficients", series_json(out.series)}};
  if (!points.empty()) {
    result["points"] = std::move(points);
    result["max_pairwise_deviation"] = max_dev;
  }

  if (args.common.format == "csv") {
    std::ostringstream csv;
    csv << "# timestamp=" << timestamp_utc() << "\nk,re,im\n";
    for (std::size_t k = 0; k < out.series.size(); ++k)
      csv << k << ',' << out.series[k].real() << ',' << out.series[k].imag() << '\n';
    emit(csv.str(), args.common.out_path);
  } else {
    emit(wrap("apply", std::move(config), std::move(result)).dump(2), args.common.out_path);
  }
  return kExitOk;
}

// ----------------------------------------------------------------- norm ----

struct NormArgs {
  std::string coeffs;
  std::string space = "bergman";
  double p = 2.0;
  int radial_order = 64;
  int n_theta = 256;
  std::vector<double> radii = htl::default_hardy_radii();
  CommonOut common;
};

int run_norm(const NormArgs& args) {
  // Banach range only on the CLI; the library itself accepts 0 < p < 1.
  if (args.p < 1.0) throw std::domain_error("norm: p >= 1 required on the command line");
  const htl::PowerSeries f = load_series(args.coeffs);

  double value = 0.0;
  if (args.space == "bergman") {
    value = htl::bergman_norm(f, args.p, htl::disk_grid(args.radial_order, args.n_theta));
  } else {
    value = htl::hardy_norm(f, args.p, args.n_theta, args.radii);
  }

  json config{{"coeffs", series_json(f)},
              {"space", args.space},
              {"p", args.p},
              {"radial_order", args.radial_order},
              {"n_theta", args.n_theta},
              {"radii", args.radii},
              {"quasi_norm", args.p < 1.0}};
  json result{{"norm", value}};

  if (args.common.format == "csv") {
    std::ostringstream csv;
    csv << "# timestamp=" << timestamp_utc() << "\nspace,p,norm\n"
        << args.space << ',' << args.p << ',' << value << '\n';
    emit(csv.str(), args.common.out_path);
  } else {
    emit(wrap("norm", std::move(config), std::move(result)).dump(2), args.common.out_path);
  }
  return kExitOk;
}

// ------------------------------------------------------------ constants ----

struct ConstantsArgs {
  std::string regime = "tensor_large_p";
  int m = 2;
  double p = 4.0;
  double p_min = 0.0;
  double p_max = 0.0;
  int p_count = 0;
  CommonOut common;
};

int run_constants(const ConstantsArgs& args) {
  const htl::BoundRegime regime = htl::regime_from_name(args.regime);
  std::vector<double> ps;
  if (args.p_count > 0) {
    if (!(args.p_max > args.p_min)) throw std::domain_error("constants: p_max > p_min required");
    for (int i = 0; i < args.p_count; ++i)
      ps.push_back(args.p_min + (args.p_max - args.p_min) * i / std::max(1, args.p_count - 1));
  } else {
    ps.push_back(args.p);
  }

  json rows = json::array();
  std::ostringstream csv;
  csv << "# timestamp=" << timestamp_utc() << "\nregime,m,p,value\n";
  csv.precision(17);
  for (double p : ps) {
    const double value = htl::bound_constant({regime, p, args.m});
    rows.push_back(json{{"regime", args.regime},
                        {"m", args.m},
                        {"p", p},
                        {"value", std::isfinite(value) ? json(value) : json("inf")}});
    csv << args.regime << ',' << args.m << ',' << p << ',';
    if (std::isfinite(value))
      csv << value << '\n';
    else
      csv << "inf" << '\n';
  }

  json config{{"regime", args.regime}, {"m", args.m},         {"p", args.p},
              {"p_min", args.p_min},   {"p_max", args.p_max}, {"p_count", args.p_count}};
  if (args.common.format == "csv") {
    emit(csv.str(), args.common.out_path);
  } else {
    emit(wrap("constants", std::move(config), json{{"table", std::move(rows)}}).dump(2),
         args.common.out_path);
  }
  return kExitOk;
}

// --------------------------------------------------------------- verify ----

struct VerifyArgs {
  std::string coeffs;
  std::string batch_dir;
  double p = 4.0;
  int m = 2;
  std::string kind = "tensor";
  htl::VerifyConfig config;
  CommonOut common;
};

int run_verify(const VerifyArgs& args) {
  const htl::TensorOrder m(args.m);
  std::vector<std::pair<std::string, htl::PowerSeries>> inputs;
  if (!args.batch_dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(args.batch_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
      throw std::invalid_argument("verify: no .json series files in " + args.batch_dir);
    for (const auto& path : files) inputs.emplace_back(path.filename(), load_series(path));
  } else {
    if (args.coeffs.empty()) throw std::invalid_argument("verify: --coeffs or --batch-dir required");
    inputs.emplace_back("inline", load_series(args.coeffs));
  }

  const auto verify_one = [&](const htl::PowerSeries& f) {
    return args.kind == "fh" ? htl::verify_fh_bound(f, args.p, m, args.config)
                             : htl::verify_bound(f, args.p, m, args.config);
  };

  // batch items run concurrently (HTL_THREADS caps the wave size); output
  // order stays the input order
  std::vector<htl::BoundReport> reports(inputs.size());
  const std::size_t cap = static_cast<std::size_t>(thread_cap());
  for (std::size_t begin = 0; begin < inputs.size(); begin += cap) {
    const std::size_t end = std::min(inputs.size(), begin + cap);
    std::vector<std::future<htl::BoundReport>> wave;
    for (std::size_t i = begin; i < end; ++i)
      wave.push_back(std::async(std::launch::async, [&, i] { return verify_one(inputs[i].second); }));
    for (std::size_t i = begin; i < end; ++i) reports[i] = wave[i - begin].get();
  }

  json rows = json::array();
  std::ostringstream csv;
  csv << "# timestamp=" << timestamp_utc() << '\n' << htl::bound_report_csv_header() << '\n';
  bool all_hold = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    json row = htl::to_json(reports[i]);
    row["input_name"] = inputs[i].first;
    rows.push_back(std::move(row));
    csv << htl::bound_report_csv_row(reports[i]) << '\n';
    all_hold = all_hold && reports[i].holds();
  }

  json config{{"p", args.p},
              {"m", args.m},
              {"kind", args.kind},
              {"batch_dir", args.batch_dir},
              {"verify", htl::to_json(args.config)}};
  if (args.common.format == "csv") {
    emit(csv.str(), args.common.out_path);
  } else {
    emit(wrap("verify", std::move(config), json{{"reports", std::move(rows)}}).dump(2),
         args.common.out_path);
  }
  return all_hold ? kExitOk : kExitAnomaly;
}

// ---------------------------------------------------------------- slice ----

struct SliceArgs {
  std::string coeffs;
  double p = 4.0;
  int m = 2;
  std::vector<double> ts = {0.5};
  htl::VerifyConfig config;
  CommonOut common;
};

int run_slice(const SliceArgs& args) {
  const htl::PowerSeries f = load_series(args.coeffs);
  const htl::TensorOrder m(args.m);

  json rows = json::array();
  std::ostringstream csv;
  csv << "# timestamp=" << timestamp_utc() << '\n' << htl::bound_report_csv_header() << '\n';
  bool all_hold = true;
  for (double t : args.ts) {
    const htl::BoundReport report = htl::verify_slice_bound(f, args.p, m, t, args.config);
    rows.push_back(htl::to_json(report));
    csv << htl::bound_report_csv_row(report) << '\n';
    all_hold = all_hold && report.holds();
  }

  json config{{"coeffs", series_json(f)},
              {"p", args.p},
              {"m", args.m},
              {"t", args.ts},
              {"verify", htl::to_json(args.config)}};
  if (args.common.format == "csv") {
    emit(csv.str(), args.common.out_path);
  } else {
    emit(wrap("slice", std::move(config), json{{"reports", std::move(rows)}}).dump(2),
         args.common.out_path);
  }
  return all_hold ? kExitOk : kExitAnomaly;
}

// --------------------------------------------------------------- search ----

struct SearchArgs {
  double p = 4.0;
  int m = 2;
  int n = 8;
  std::int64_t budget = 1000;
  std::uint64_t seed = 0;
  std::string init;
  std::string trajectory_path;
  htl::VerifyConfig config;
  CommonOut common;
};

int run_search(const SearchArgs& args) {
  htl::SearchOptions opts;
  opts.p = args.p;
  opts.m = args.m;
  opts.n_coeffs = args.n;
  opts.budget = args.budget;
  opts.seed = args.seed;
  opts.config = args.config;
  if (!args.init.empty()) {
    const htl::PowerSeries warm = load_series(args.init);
    std::vector<double> init;
    for (std::size_t k = 0; k < warm.size(); ++k) init.push_back(warm[k].real());
    opts.initial = std::move(init);
  }

  const htl::SearchResult result = htl::extremal_search(opts);
  if (!args.trajectory_path.empty()) {
    std::ofstream traj(args.trajectory_path);
    if (!traj) throw std::invalid_argument("cannot open " + args.trajectory_path);
    traj << htl::trajectory_csv(result);
  }

  json config{{"p", args.p},       {"m", args.m},     {"n", args.n},
              {"budget", args.budget}, {"seed", args.seed}, {"init", args.init},
              {"verify", htl::to_json(args.config)}};
  if (args.common.format == "csv") {
    std::ostringstream csv;
    csv << "# timestamp=" << timestamp_utc() << '\n' << htl::trajectory_csv(result);
    emit(csv.str(), args.common.out_path);
  } else {
    emit(wrap("search", std::move(config), htl::to_json(result)).dump(2), args.common.out_path);
  }
  return kExitOk;
}

// ---------------------------------------------------------- equivalence ----

struct EquivalenceArgs {
  std::string coeffs;
  int m = 2;
  int n_radii = 5;
  int n_angles = 8;
  double z_max = 0.9;
  int order = 16;
  int levels = 40;
  CommonOut common;
};

int run_equivalence(const EquivalenceArgs& args) {
  const htl::PowerSeries f = load_series(args.coeffs);
  const htl::TensorOrder m(args.m);
  if (!(args.z_max > 0.0 && args.z_max < 1.0))
    throw std::domain_error("equivalence: 0 < z_max < 1 required");
  if (args.n_radii < 1 || args.n_angles < 1)
    throw std::domain_error("equivalence: n_radii, n_angles >= 1 required");

  const htl::QuadratureRule rule = htl::singular_line_rule(args.order, args.levels);
  const std::size_t K = htl::output_truncation(args.z_max, 1e-12);
  const htl::OperatorOutput dense = htl::apply_series(f, m, K);
  const htl::IntegralEvaluator direct(f, m, rule);

  json rows = json::array();
  std::ostringstream csv;
  csv << "# timestamp=" << timestamp_utc()
      << "\nre,im,series_re,series_im,integral_re,integral_im,mobius_re,mobius_im,max_dev\n";
  csv.precision(17);
  double max_dev = 0.0;
  for (int i = 1; i <= args.n_radii; ++i) {
    const double r = args.z_max * i / args.n_radii;
    for (int j = 0; j < args.n_angles; ++j) {
      const double th = 2.0 * std::numbers::pi * j / args.n_angles;
      const htl::cx z{r * std::cos(th), r * std::sin(th)};
      const htl::cx via_series = htl::evaluate(dense.series, z);
      const htl::cx via_integral = direct(z);
      const htl::cx via_mobius = htl::apply_mobius(f, m, z, rule);
      const double dev = std::max({std::abs(via_series - via_integral),
                                   std::abs(via_integral - via_mobius),
                                   std::abs(via_series - via_mobius)});
      max_dev = std::max(max_dev, dev);
      rows.push_back(json{{"z", complex_json(z)},
                          {"series", complex_json(via_series)},
                          {"integral", complex_json(via_integral)},
                          {"mobius", complex_json(via_mobius)},
                          {"max_dev", dev}});
      csv << z.real() << ',' << z.imag() << ',' << via_series.real() << ',' << via_series.imag()
          << ',' << via_integral.real() << ',' << via_integral.imag() << ',' << via_mobius.real()
          << ',' << via_mobius.imag() << ',' << dev << '\n';
    }
  }

  json config{{"coeffs", series_json(f)},  {"m", args.m},         {"n_radii", args.n_radii},
              {"n_angles", args.n_angles}, {"z_max", args.z_max}, {"order", args.order},
              {"levels", args.levels},     {"K", K}};
  if (args.common.format == "csv") {
    emit(csv.str(), args.common.out_path);
  } else {
    emit(wrap("equivalence", std::move(config),
              json{{"points", std::move(rows)}, {"max_pairwise_deviation", max_dev}})
             .dump(2),
         args.common.out_path);
  }
  return kExitOk;
}

void add_verify_options(CLI::App* cmd, htl::VerifyConfig& config) {
  cmd->add_option("--radial-order", config.radial_order, "Disk grid radial Gauss order")
      ->capture_default_str();
  cmd->add_option("--n-theta", config.n_theta, "Disk grid angular points")->capture_default_str();
  cmd->add_option("--order", config.quad_order, "Line quadrature order")->capture_default_str();
  cmd->add_option("--levels", config.quad_levels, "Line quadrature dyadic levels")
      ->capture_default_str();
  cmd->add_option("--tail-tol", config.tail_tol, "Series tail budget at the outermost radius")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert tensor operators on Bergman and Hardy spaces of the unit disk"};
  app.require_subcommand(1);

  ApplyArgs apply_args;
  CLI::App* apply = app.add_subcommand("apply", "Apply the order-m Hilbert tensor operator");
  apply->add_option("--coeffs", apply_args.coeffs, "Series: inline JSON array or file path")
      ->required();
  apply->add_option("--m", apply_args.m, "Tensor order")->capture_default_str();
  apply->add_option("--K", apply_args.K, "Output coefficients to report")->capture_default_str();
  apply->add_option("--paths", apply_args.paths, "Evaluation paths at --z points")
      ->check(CLI::IsMember({"series", "integral", "mobius", "all"}))
      ->capture_default_str();
  apply->add_option("--z", apply_args.z_texts, "Evaluation points re or re,im (repeatable)");
  apply->add_option("--order", apply_args.order, "Line quadrature order")->capture_default_str();
  apply->add_option("--levels", apply_args.levels, "Line quadrature levels")->capture_default_str();
  add_common(apply, apply_args.common);

  NormArgs norm_args;
  CLI::App* norm = app.add_subcommand("norm", "Bergman or Hardy norm of a series");
  norm->add_option("--coeffs", norm_args.coeffs, "Series: inline JSON array or file path")
      ->required();
  norm->add_option("--space", norm_args.space, "Which space")
      ->check(CLI::IsMember({"bergman", "hardy"}))
      ->capture_default_str();
  norm->add_option("--p", norm_args.p, "Exponent (p >= 1)")->capture_default_str();
  norm->add_option("--radial-order", norm_args.radial_order, "Disk grid radial order")
      ->capture_default_str();
  norm->add_option("--n-theta", norm_args.n_theta, "Angular points")->capture_default_str();
  norm->add_option("--radii", norm_args.radii, "Hardy radius ladder")->capture_default_str();
  add_common(norm, norm_args.common);

  ConstantsArgs constants_args;
  CLI::App* constants = app.add_subcommand("constants", "Closed-form norm-bound constants");
  constants->add_option("--regime", constants_args.regime, "Constant family")
      ->check(CLI::IsMember(
          {"matrix_lp", "tensor_large_p", "tensor_small_p", "fh_large_p", "fh_small_p"}))
      ->capture_default_str();
  constants->add_option("--m", constants_args.m, "Tensor order")->capture_default_str();
  constants->add_option("--p", constants_args.p, "Single exponent")->capture_default_str();
  constants->add_option("--p-min", constants_args.p_min, "Grid start");
  constants->add_option("--p-max", constants_args.p_max, "Grid end");
  constants->add_option("--p-count", constants_args.p_count, "Grid size (enables the grid)");
  add_common(constants, constants_args.common);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Verify the operator norm bound on inputs");
  verify->add_option("--coeffs", verify_args.coeffs, "Series: inline JSON array or file path");
  verify->add_option("--batch-dir", verify_args.batch_dir,
                     "Directory of .json series files (batch mode)");
  verify->add_option("--p", verify_args.p, "Target space exponent")->capture_default_str();
  verify->add_option("--m", verify_args.m, "Tensor order")->capture_default_str();
  verify->add_option("--kind", verify_args.kind, "Which bound")
      ->check(CLI::IsMember({"tensor", "fh"}))
      ->capture_default_str();
  add_verify_options(verify, verify_args.config);
  add_common(verify, verify_args.common);

  SliceArgs slice_args;
  CLI::App* slice = app.add_subcommand("slice", "Verify the per-slice bounds");
  slice->add_option("--coeffs", slice_args.coeffs, "Series: inline JSON array or file path")
      ->required();
  slice->add_option("--p", slice_args.p, "Target space exponent")->capture_default_str();
  slice->add_option("--m", slice_args.m, "Tensor order")->capture_default_str();
  slice->add_option("--t", slice_args.ts, "Slice positions in (0,1)")->capture_default_str();
  add_verify_options(slice, slice_args.config);
  add_common(slice, slice_args.common);

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "Extremal search for operator-norm lower bounds");
  search->add_option("--p", search_args.p, "Target space exponent")->capture_default_str();
  search->add_option("--m", search_args.m, "Tensor order")->capture_default_str();
  search->add_option("--n", search_args.n, "Coefficient vector length")->capture_default_str();
  search->add_option("--budget", search_args.budget, "Objective evaluation budget")
      ->capture_default_str();
  search->add_option("--seed", search_args.seed, "RNG seed")->capture_default_str();
  search->add_option("--init", search_args.init, "Warm-start series (JSON array or file)");
  search->add_option("--trajectory", search_args.trajectory_path,
                     "Also write the improvement trajectory CSV here");
  add_verify_options(search, search_args.config);
  add_common(search, search_args.common);

  EquivalenceArgs equivalence_args;
  CLI::App* equivalence =
      app.add_subcommand("equivalence", "Cross-check the three evaluation paths on a z-grid");
  equivalence->add_option("--coeffs", equivalence_args.coeffs, "Series (JSON array or file)")
      ->required();
  equivalence->add_option("--m", equivalence_args.m, "Tensor order")->capture_default_str();
  equivalence->add_option("--n-radii", equivalence_args.n_radii, "Radial grid size")
      ->capture_default_str();
  equivalence->add_option("--n-angles", equivalence_args.n_angles, "Angular grid size")
      ->capture_default_str();
  equivalence->add_option("--z-max", equivalence_args.z_max, "Largest radius")
      ->capture_default_str();
  equivalence->add_option("--order", equivalence_args.order, "Line quadrature order")
      ->capture_default_str();
  equivalence->add_option("--levels", equivalence_args.levels, "Line quadrature levels")
      ->capture_default_str();
  add_common(equivalence, equivalence_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (apply->parsed()) return run_apply(apply_args);
    if (norm->parsed()) return run_norm(norm_args);
    if (constants->parsed()) return run_constants(constants_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (slice->parsed()) return run_slice(slice_args);
    if (search->parsed()) return run_search(search_args);
    if (equivalence->parsed()) return run_equivalence(equivalence_args);
  } catch (const htl::AnomalyError& e) {
    std::cerr << "anomaly: " << e.what() << '\n';
    return kExitAnomaly;
  } catch (const std::domain_error& e) {
    std::cerr << "domain violation: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}
