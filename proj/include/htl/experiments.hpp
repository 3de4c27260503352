#ifndef HTL_EXPERIMENTS_HPP
#define HTL_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "htl/hilbert.hpp"
#include "htl/quadrature.hpp"
#include "htl/series.hpp"
#include "htl/spaces.hpp"
#include "htl/special.hpp"

namespace htl {

// Grids and truncations used by the verification pipeline, embedded verbatim
// in every report.
struct VerifyConfig {
  int radial_order = 32;
  int n_theta = 128;
  int quad_order = 16;
  int quad_levels = 40;
  double tail_tol = 1e-8;  // series tail budget at the grid's outermost radius
};

// Output truncation K such that the crude tail bound
// sum_{k>=K} R^k/(k+1) <= R^K/((K+1)(1-R)) drops below tol; relative to
// ||b||_1, which bounds every output coefficient times (k+1).
std::size_t output_truncation(double max_radius, double tol);

// One verified inequality instance.
struct BoundReport {
  std::string kind;        // tensor_bound | slice_bound | fh_bound
  double p = 0.0;
  int m = 2;
  std::string input_desc;
  VerifyConfig config;
  BoundRegime regime = BoundRegime::tensor_large_p;
  std::optional<double> t;  // slice reports only
  std::size_t trunc_K = 0;

  double lhs = 0.0;
  double rhs = 0.0;
  int branch_warnings = 0;  // fh reports: root evaluated at |H(f)| ~ 0

  double ratio() const { return lhs / rhs; }
  double margin() const { return rhs - lhs; }
  bool holds() const { return lhs <= rhs * (1.0 + 1e-9); }
  // A report that needed the root's zero branch does not certify anything.
  bool certifying() const { return branch_warnings == 0; }
};

// T_H(f) = ||f||_{A^{p(m-1)}}^{2-m} H(f); zero maps to zero. p > 2.
OperatorOutput t_operator(const PowerSeries& f, double p, TensorOrder m, std::size_t out_len,
                          const DiskGrid& grid);

struct FhValue {
  cx value;
  bool branch_warning = false;  // |H(f)(z)| below 1e-13: root pinned to 0
};

// F_H(f)(z) = (H(f)(z))^(1/(m-1)) by the principal branch; m even.
FhValue f_operator(const PowerSeries& f, TensorOrder m, cx z, const QuadratureRule& rule);

// ||H(f)||_{A^p} <= C(p) ||f||_{A^{p(m-1)}}^{m-1},  p > 2.
BoundReport verify_bound(const PowerSeries& f, double p, TensorOrder m, const VerifyConfig& config);

// Slice bounds on ||T_t(f)||_{A^p}: t^{2/p-1}(1-t)^{-2/p}||f||^{m-1} for
// p >= 4, and 2^{4/p-1} t^{-2/p}(1-t)^{-2/p}||f||^{m-1} for 2 < p <= 4.
BoundReport verify_slice_bound(const PowerSeries& f, double p, TensorOrder m, double t,
                               const VerifyConfig& config);

// ||F_H(f)||_{A^p} <= C_F(p,m) ||f||_{A^p}; m even, p > 2(m-1).
BoundReport verify_fh_bound(const PowerSeries& f, double p, TensorOrder m,
                            const VerifyConfig& config);

struct SearchResult {
  PowerSeries best_coeffs;
  double best_ratio = 0.0;
  std::int64_t evaluations = 0;
  std::uint64_t seed = 0;
  double bound = 0.0;
  std::vector<std::pair<std::int64_t, double>> trajectory;  // (evaluation #, best so far)
};

struct SearchOptions {
  double p = 4.0;
  int m = 2;
  int n_coeffs = 8;
  std::int64_t budget = 1000;
  std::uint64_t seed = 0;
  VerifyConfig config;
  std::optional<std::vector<double>> initial;  // warm start; tried before random restarts
};

// Maximizes ||H(f)||_{A^p} / ||f||_{A^{p(m-1)}}^{m-1} over real coefficient
// vectors by seeded random restarts + coordinatewise pattern search with
// step halving (floor 1e-6). Deterministic for a fixed option set. Throws
// AnomalyError if the best ratio lands above the proved constant.
SearchResult extremal_search(const SearchOptions& opts);

// The search objective, exposed so reports can be re-verified from scratch.
double bound_ratio(const PowerSeries& f, double p, TensorOrder m, const VerifyConfig& config);

}  // namespace htl

#endif
