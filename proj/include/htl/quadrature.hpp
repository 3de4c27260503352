#ifndef HTL_QUADRATURE_HPP
#define HTL_QUADRATURE_HPP

#include <cstddef>
#include <vector>

#include "htl/numeric.hpp"

namespace htl {

// Nodes strictly inside (0,1) with positive weights summing to 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <typename F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0) * 0.0);
    std::vector<R> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) terms[i] = weights[i] * f(nodes[i]);
    return pairwise_sum<R>(terms);
  }
};

// Gauss-Legendre on [0,1]; exact for polynomials of degree <= 2*order - 1.
QuadratureRule gauss_line_rule(int order);

// Composite rule for integrands with an algebraic singularity at s = 1:
// dyadic panels with boundaries 1 - 2^-j carry a Gauss rule of the given
// order; the closing panel [1 - 2^-L, 1] is mapped through 1 - s = h*v^q
// (q = min(4, 2*order)) so that integrable endpoint singularities become
// mild in v. The dyadic depth L is min(levels, representable depth): past
// that point the mapped nodes would round onto s = 1 in double precision.
QuadratureRule singular_line_rule(int order, int levels);

// Tensor-product grid for the unit disk under normalized area measure
// d(mu) = (1/pi) r dr dtheta. Radially a Gauss rule in u = r^2 on [0,1],
// angularly the n_theta-point uniform (trapezoid) rule, which is exact for
// trigonometric polynomials of degree < n_theta.
struct DiskGrid {
  std::vector<double> radii;           // sqrt of the u-rule nodes
  std::vector<double> radial_weights;  // u-rule weights; angular factor is 1/n_theta
  int n_theta = 0;

  double max_radius() const { return radii.empty() ? 0.0 : radii.back(); }
  double theta(int j) const;
  cx point(std::size_t i, int j) const;

  // sum over the grid of weight * f(z); f returns double.
  template <typename F>
  double integrate(F&& f) const {
    std::vector<double> radial(radii.size());
    std::vector<double> ring(static_cast<std::size_t>(n_theta));
    for (std::size_t i = 0; i < radii.size(); ++i) {
      for (int j = 0; j < n_theta; ++j) ring[static_cast<std::size_t>(j)] = f(point(i, j));
      radial[i] = radial_weights[i] * pairwise_sum<double>(ring) / n_theta;
    }
    return pairwise_sum<double>(radial);
  }
};

DiskGrid disk_grid(int radial_order, int n_theta);

}  // namespace htl

#endif
