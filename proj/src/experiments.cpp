#include "htl/experiments.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace htl {

namespace {

std::string describe(const PowerSeries& f) {
  std::ostringstream out;
  out << "series " << series_to_json(f);
  return out.str();
}

void require_nonzero(const PowerSeries& f, const char* who) {
  if (f.is_zero()) throw std::invalid_argument(std::string(who) + ": zero series");
}

void require_even(TensorOrder m, const char* who) {
  if (m.value() % 2 != 0) throw std::domain_error(std::string(who) + ": even m required");
}

double norm_power(double norm, int e) { return std::pow(norm, e); }

}  // namespace

std::size_t output_truncation(double max_radius, double tol) {
  if (!(max_radius > 0.0 && max_radius < 1.0))
    throw std::domain_error("output_truncation: radius in (0,1) required");
  if (!(tol > 0.0)) throw std::domain_error("output_truncation: tol > 0 required");
  const auto tail = [&](std::size_t k) {
    return std::exp(static_cast<double>(k) * std::log(max_radius)) /
           (static_cast<double>(k + 1) * (1.0 - max_radius));
  };
  std::size_t hi = 16;
  while (tail(hi) >= tol) hi *= 2;
  std::size_t lo = hi / 2;
  while (lo + 1 < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (tail(mid) < tol ? hi : lo) = mid;
  }
  return std::max<std::size_t>(hi, 4);
}

OperatorOutput t_operator(const PowerSeries& f, double p, TensorOrder m, std::size_t out_len,
                          const DiskGrid& grid) {
  if (!(p > 2.0)) throw std::domain_error("t_operator: 2 < p required");
  const double norm = f.is_zero() ? 0.0 : bergman_norm(f, p * m.power(), grid);
  if (norm < 1e-300)
    return OperatorOutput{PowerSeries::zero(out_len), f.size(), m.value()};
  OperatorOutput out = apply_series(f, m, out_len);
  out.series = scale(out.series, cx{std::pow(norm, 2.0 - m.value()), 0.0});
  return out;
}

FhValue f_operator(const PowerSeries& f, TensorOrder m, cx z, const QuadratureRule& rule) {
  require_even(m, "f_operator");
  const cx w = apply_integral(f, m, z, rule);
  if (std::abs(w) < 1e-13) return FhValue{cx{0.0, 0.0}, true};
  return FhValue{std::exp(std::log(w) / static_cast<double>(m.power())), false};
}

BoundReport verify_bound(const PowerSeries& f, double p, TensorOrder m,
                         const VerifyConfig& config) {
  require_nonzero(f, "verify_bound");
  const BoundRegime regime = tensor_regime(p);  // rejects p <= 2

  const DiskGrid grid = disk_grid(config.radial_order, config.n_theta);
  const std::size_t K = output_truncation(grid.max_radius(), config.tail_tol);
  const OperatorOutput out = apply_series(f, m, K);

  BoundReport report;
  report.kind = "tensor_bound";
  report.p = p;
  report.m = m.value();
  report.input_desc = describe(f);
  report.config = config;
  report.regime = regime;
  report.trunc_K = K;
  report.lhs = bergman_norm(out.series, p, grid);
  report.rhs = bound_constant({regime, p, m.value()}) *
               norm_power(bergman_norm(f, p * m.power(), grid), m.power());
  return report;
}

BoundReport verify_slice_bound(const PowerSeries& f, double p, TensorOrder m, double t,
                               const VerifyConfig& config) {
  require_nonzero(f, "verify_slice_bound");
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("verify_slice_bound: t in (0,1) required");
  const BoundRegime regime = tensor_regime(p);

  // |psi(t,.)|^p peaks near z = 1 on the angular scale t/(1-t); the angular
  // grid must resolve that or the norm is overestimated. Capped; slices much
  // closer to t = 0 than ~1e-2 need an explicit n_theta.
  const int n_theta = std::min(
      16384, std::max(config.n_theta, static_cast<int>(std::ceil(96.0 * (1.0 - t) / t))));
  VerifyConfig effective = config;
  effective.n_theta = n_theta;
  const DiskGrid grid = disk_grid(config.radial_order, n_theta);
  std::vector<std::vector<cx>> rows(grid.radii.size());
  for (std::size_t i = 0; i < grid.radii.size(); ++i) {
    rows[i].resize(static_cast<std::size_t>(grid.n_theta));
    for (int j = 0; j < grid.n_theta; ++j)
      rows[i][static_cast<std::size_t>(j)] = slice_operator(f, m, t, grid.point(i, j));
  }

  const double input_norm = norm_power(bergman_norm(f, p * m.power(), grid), m.power());
  const double factor =
      regime == BoundRegime::tensor_large_p
          ? std::pow(t, 2.0 / p - 1.0) * std::pow(1.0 - t, -2.0 / p)
          : std::pow(2.0, 4.0 / p - 1.0) * std::pow(t, -2.0 / p) * std::pow(1.0 - t, -2.0 / p);

  BoundReport report;
  report.kind = "slice_bound";
  report.p = p;
  report.m = m.value();
  report.input_desc = describe(f);
  report.config = effective;
  report.regime = regime;
  report.t = t;
  report.lhs = bergman_norm_of_values(rows, p, grid);
  report.rhs = factor * input_norm;
  return report;
}

BoundReport verify_fh_bound(const PowerSeries& f, double p, TensorOrder m,
                            const VerifyConfig& config) {
  require_nonzero(f, "verify_fh_bound");
  require_even(m, "verify_fh_bound");
  const BoundRegime regime = fh_regime(p, m.value());  // rejects p <= 2(m-1)

  const DiskGrid grid = disk_grid(config.radial_order, config.n_theta);
  const QuadratureRule rule = singular_line_rule(config.quad_order, config.quad_levels);
  const IntegralEvaluator hf(f, m, rule);

  int warnings = 0;
  const double root = 1.0 / static_cast<double>(m.power());
  std::vector<std::vector<cx>> rows(grid.radii.size());
  for (std::size_t i = 0; i < grid.radii.size(); ++i) {
    rows[i].resize(static_cast<std::size_t>(grid.n_theta));
    for (int j = 0; j < grid.n_theta; ++j) {
      const cx w = hf(grid.point(i, j));
      if (std::abs(w) < 1e-13) {
        ++warnings;
        rows[i][static_cast<std::size_t>(j)] = cx{0.0, 0.0};
      } else {
        rows[i][static_cast<std::size_t>(j)] = std::exp(std::log(w) * root);
      }
    }
  }

  BoundReport report;
  report.kind = "fh_bound";
  report.p = p;
  report.m = m.value();
  report.input_desc = describe(f);
  report.config = config;
  report.regime = regime;
  report.branch_warnings = warnings;
  report.lhs = bergman_norm_of_values(rows, p, grid);
  report.rhs = bound_constant({regime, p, m.value()}) * bergman_norm(f, p, grid);
  return report;
}

namespace {

// Search objective over a fixed grid/truncation pair; x is normalized to
// unit input norm first, so the returned value is the bound ratio itself.
class RatioObjective {
 public:
  RatioObjective(double p, TensorOrder m, const VerifyConfig& config)
      : p_(p),
        m_(m),
        grid_(disk_grid(config.radial_order, config.n_theta)),
        trunc_(output_truncation(grid_.max_radius(), config.tail_tol)) {}

  // negative infinity for the zero vector (outside the domain)
  double operator()(const std::vector<double>& x) const {
    bool all_zero = true;
    for (double v : x) all_zero = all_zero && v == 0.0;
    if (all_zero) return -std::numeric_limits<double>::infinity();
    PowerSeries f = PowerSeries::from_real(x);
    const double input_norm = bergman_norm(f, p_ * m_.power(), grid_);
    if (input_norm < 1e-300) return -std::numeric_limits<double>::infinity();
    f = scale(f, cx{1.0 / input_norm, 0.0});
    const OperatorOutput out = apply_series(f, m_, trunc_);
    return bergman_norm(out.series, p_, grid_);
  }

  std::size_t truncation() const { return trunc_; }

 private:
  double p_;
  TensorOrder m_;
  DiskGrid grid_;
  std::size_t trunc_;
};

}  // namespace

double bound_ratio(const PowerSeries& f, double p, TensorOrder m, const VerifyConfig& config) {
  require_nonzero(f, "bound_ratio");
  const DiskGrid grid = disk_grid(config.radial_order, config.n_theta);
  const std::size_t K = output_truncation(grid.max_radius(), config.tail_tol);
  const OperatorOutput out = apply_series(f, m, K);
  return bergman_norm(out.series, p, grid) /
         norm_power(bergman_norm(f, p * m.power(), grid), m.power());
}

SearchResult extremal_search(const SearchOptions& opts) {
  if (opts.n_coeffs < 1) throw std::domain_error("extremal_search: n_coeffs >= 1 required");
  if (opts.budget < 1) throw std::domain_error("extremal_search: budget >= 1 required");
  const TensorOrder m(opts.m);
  const BoundRegime regime = tensor_regime(opts.p);
  const double bound = bound_constant({regime, opts.p, opts.m});

  const RatioObjective objective(opts.p, m, opts.config);
  const std::size_t n = static_cast<std::size_t>(opts.n_coeffs);

  std::int64_t evals = 0;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> best_x(n, 0.0);
  std::vector<std::pair<std::int64_t, double>> trajectory;

  const auto evaluate_point = [&](const std::vector<double>& x) {
    const double value = objective(x);
    ++evals;
    if (value > best) {
      best = value;
      best_x = x;
      trajectory.emplace_back(evals, value);
    }
    return value;
  };

  constexpr double kInitialStep = 0.25;
  constexpr double kStepFloor = 1e-6;

  for (std::uint64_t restart = 0; evals < opts.budget; ++restart) {
    std::mt19937_64 rng(mix64(opts.seed ^ mix64(restart + 1)));
    std::vector<double> x(n, 0.0);
    if (restart == 0 && opts.initial) {
      for (std::size_t i = 0; i < n && i < opts.initial->size(); ++i) x[i] = (*opts.initial)[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) x[i] = 2.0 * canonical_unit(rng()) - 1.0;
    }

    double fx = evaluate_point(x);
    double step = kInitialStep;
    while (step >= kStepFloor && evals < opts.budget) {
      bool improved = false;
      for (std::size_t i = 0; i < n && evals < opts.budget; ++i) {
        for (double sign : {1.0, -1.0}) {
          if (evals >= opts.budget) break;
          std::vector<double> y = x;
          y[i] += sign * step;
          const double fy = evaluate_point(y);
          if (fy > fx) {
            x = std::move(y);
            fx = fy;
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  }

  if (!std::isfinite(best))
    throw std::invalid_argument("extremal_search: no feasible point evaluated");

  // re-verify the winner from scratch before reporting
  SearchResult result{PowerSeries::from_real(best_x), 0.0, evals, opts.seed, bound,
                      std::move(trajectory)};
  result.best_ratio = bound_ratio(result.best_coeffs, opts.p, m, opts.config);
  if (result.best_ratio > bound + 1e-6) {
    std::ostringstream msg;
    msg << "extremal_search: ratio " << result.best_ratio << " exceeds proved bound " << bound;
    throw AnomalyError(msg.str());
  }
  return result;
}

}  // namespace htl
