#include "htl/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace htl {

namespace {

void require_norm_exponent(double p) {
  if (!(p > 0.0)) throw std::domain_error("norm: p > 0 required");
}

// f on one circle of radius r at the n uniform angles. Coefficients are
// folded modulo n (e^{ik theta_j} only depends on k mod n there), so long
// series cost O(len + n^2) instead of O(len * n); short ones go through
// Horner directly.
std::vector<cx> circle_values(const PowerSeries& f, double r, int n) {
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<cx> values(un);
  if (f.size() < un / 2) {
    for (int j = 0; j < n; ++j) {
      const double th = 2.0 * std::numbers::pi * j / n;
      values[static_cast<std::size_t>(j)] = evaluate(f, cx{r * std::cos(th), r * std::sin(th)});
    }
    return values;
  }
  std::vector<cx> folded(un, cx{0.0, 0.0});
  double r_pow = 1.0;
  for (std::size_t k = 0, res = 0; k < f.size(); ++k) {
    folded[res] += f[k] * r_pow;
    r_pow *= r;
    // once the radial decay underflows it contributes nothing; stopping here
    // also keeps r_pow off the subnormal slow path
    if (r_pow < 1e-300) break;
    if (++res == un) res = 0;
  }
  std::vector<cx> roots(un);
  for (std::size_t t = 0; t < un; ++t) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(t) / n;
    roots[t] = cx{std::cos(th), std::sin(th)};
  }
  for (std::size_t j = 0; j < un; ++j) {
    double vr = 0.0, vi = 0.0;
    for (std::size_t res = 0, idx = 0; res < un; ++res) {
      const cx g = folded[res];
      const cx w = roots[idx];
      vr += g.real() * w.real() - g.imag() * w.imag();
      vi += g.real() * w.imag() + g.imag() * w.real();
      idx += j;
      if (idx >= un) idx -= un;
    }
    values[j] = cx{vr, vi};
  }
  return values;
}

double mean_abs_p(const std::vector<cx>& values, double p) {
  std::vector<double> terms(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    terms[i] = std::pow(std::norm(values[i]), 0.5 * p);
  return pairwise_sum<double>(terms) / static_cast<double>(values.size());
}

}  // namespace

std::vector<std::vector<cx>> grid_values(const PowerSeries& f, const DiskGrid& grid) {
  std::vector<std::vector<cx>> rows;
  rows.reserve(grid.radii.size());
  for (double r : grid.radii) rows.push_back(circle_values(f, r, grid.n_theta));
  return rows;
}

double bergman_norm(const PowerSeries& f, double p, const DiskGrid& grid) {
  require_norm_exponent(p);
  std::vector<double> radial(grid.radii.size());
  for (std::size_t i = 0; i < grid.radii.size(); ++i)
    radial[i] = grid.radial_weights[i] * mean_abs_p(circle_values(f, grid.radii[i], grid.n_theta), p);
  return std::pow(pairwise_sum<double>(radial), 1.0 / p);
}

double bergman_norm_of_values(const std::vector<std::vector<cx>>& rows, double p,
                              const DiskGrid& grid) {
  require_norm_exponent(p);
  if (rows.size() != grid.radii.size())
    throw std::invalid_argument("bergman_norm_of_values: one row per radius required");
  std::vector<double> radial(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    radial[i] = grid.radial_weights[i] * mean_abs_p(rows[i], p);
  return std::pow(pairwise_sum<double>(radial), 1.0 / p);
}

double circle_mean(const PowerSeries& f, double p, double r, int n_theta) {
  require_norm_exponent(p);
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("circle_mean: r in [0,1] required");
  return std::pow(mean_abs_p(circle_values(f, r, n_theta), p), 1.0 / p);
}

double hardy_norm(const PowerSeries& f, double p, int n_theta, const std::vector<double>& radii) {
  require_norm_exponent(p);
  if (radii.empty()) throw std::domain_error("hardy_norm: at least one radius required");
  for (double r : radii)
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("hardy_norm: radii must lie in [0,1)");

  std::vector<double> sorted(radii);
  std::sort(sorted.begin(), sorted.end());
  double best = 0.0, previous = 0.0;
  for (double r : sorted) {
    const double mean = circle_mean(f, p, r, n_theta);
    // circle means of a truncated series are nondecreasing in r
    if (mean < previous * (1.0 - 1e-9))
      throw AnomalyError("hardy_norm: circle means decreased with radius");
    previous = mean;
    best = std::max(best, mean);
  }
  return best;
}

GrowthCheck growth_bound_check(const PowerSeries& f, const SpaceSpec& spec, cx z, double norm,
                               int n_theta) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("growth_bound_check: |z| < 1 required");
  require_norm_exponent(spec.p);

  GrowthCheck check;
  check.lhs = std::abs(evaluate(f, z));
  if (spec.family == SpaceFamily::bergman) {
    check.rhs = std::pow(1.0 / (1.0 - std::norm(z)), 2.0 / spec.p) * norm;
    check.verdict =
        check.lhs <= check.rhs * (1.0 + 1e-9) ? GrowthVerdict::holds : GrowthVerdict::fails;
    return check;
  }

  const double factor = std::pow(2.0 / (1.0 - std::abs(z)), 1.0 / spec.p);
  check.rhs = factor * norm;
  // The supplied Hardy norm is a lower estimate (sup over a radius ladder);
  // the boundary circle mean of the truncated series bounds what was missed.
  const double boundary = circle_mean(f, spec.p, 1.0, n_theta);
  check.slack = factor * std::max(0.0, boundary - norm);
  if (check.lhs <= check.rhs * (1.0 + 1e-9))
    check.verdict = GrowthVerdict::holds;
  else if (check.lhs <= (check.rhs + check.slack) * (1.0 + 1e-9))
    check.verdict = GrowthVerdict::indeterminate;
  else
    check.verdict = GrowthVerdict::fails;
  return check;
}

}  // namespace htl
