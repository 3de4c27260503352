#ifndef HTL_SPACES_HPP
#define HTL_SPACES_HPP

#include <vector>

#include "htl/quadrature.hpp"
#include "htl/series.hpp"

namespace htl {

enum class SpaceFamily { bergman, hardy };

struct SpaceSpec {
  SpaceFamily family = SpaceFamily::bergman;
  double p = 2.0;
};

// Values of f on every point of the grid, one vector of length n_theta per
// radius. Long series are folded modulo n_theta per radius (e^{ik theta_j}
// is periodic in k on the uniform angular grid), so cost is
// O(radii * (len + n_theta^2)) instead of O(radii * n_theta * len).
std::vector<std::vector<cx>> grid_values(const PowerSeries& f, const DiskGrid& grid);

// Bergman norm ||f||_{A^p} = (integral_B |f|^p dmu)^(1/p) by disk quadrature.
double bergman_norm(const PowerSeries& f, double p, const DiskGrid& grid);

// Same norm for a function already sampled on the grid (rows as returned by
// grid_values: one vector of length n_theta per radius).
double bergman_norm_of_values(const std::vector<std::vector<cx>>& rows, double p,
                              const DiskGrid& grid);

// Circle mean M_p(f, r) = ((1/2pi) integral |f(r e^{i theta})|^p dtheta)^(1/p)
// on the n_theta-point uniform grid.
double circle_mean(const PowerSeries& f, double p, double r, int n_theta);

// Hardy norm approximated from below: max of the circle means over the given
// radii (all < 1). For a truncated series the mean is nondecreasing in r; the
// scan checks that as it goes.
double hardy_norm(const PowerSeries& f, double p, int n_theta, const std::vector<double>& radii);

inline std::vector<double> default_hardy_radii() { return {0.9, 0.99, 0.999}; }

enum class GrowthVerdict { holds, indeterminate, fails };

struct GrowthCheck {
  double lhs = 0.0;   // |f(z)|
  double rhs = 0.0;   // bound constant * supplied norm
  double slack = 0.0; // Hardy only: growth of rhs if the true sup norm were used
  GrowthVerdict verdict = GrowthVerdict::holds;
};

// Pointwise growth bounds: |f(z)| <= (2/(1-|z|))^(1/p) ||f||_{H^p} and
// |f(z)| <= (1/(1-|z|^2))^(2/p) ||f||_{A^p}. The supplied norm is trusted;
// for Hardy it is a lower estimate of the sup, so a marginal excess within
// the boundary-mean slack is reported indeterminate rather than failed.
GrowthCheck growth_bound_check(const PowerSeries& f, const SpaceSpec& spec, cx z, double norm,
                               int n_theta = 256);

}  // namespace htl

#endif
