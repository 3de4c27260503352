#include "htl/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace htl {

namespace {

// Gauss-Legendre on [-1,1] by Newton iteration on P_n. Nodes are the roots
// of P_n, weights 2/((1-x^2) P_n'(x)^2).
void legendre_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(static_cast<std::size_t>(n));
  w.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double xi = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // recurrence (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
      double p0 = 1.0, p1 = xi;
      for (int k = 1; k < n; ++k) {
        const double p2 = ((2.0 * k + 1.0) * xi * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
      const double dx = p1 / dp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // one clean evaluation of P' at the converged node for the weight
    double p0 = 1.0, p1 = xi;
    for (int k = 1; k < n; ++k) {
      const double p2 = ((2.0 * k + 1.0) * xi * p1 - k * p0) / (k + 1.0);
      p0 = p1;
      p1 = p2;
    }
    dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
    const std::size_t lo = static_cast<std::size_t>(i);
    const std::size_t hi = static_cast<std::size_t>(n - 1 - i);
    x[lo] = -xi;  // xi > 0 from the cosine seed; fill symmetric pair
    x[hi] = xi;
    w[lo] = w[hi] = 2.0 / ((1.0 - xi * xi) * dp * dp);
  }
  if (n % 2 == 1) {
    // middle node is exactly 0
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k < n; ++k) {
      const double p2 = (-k * p0) / (k + 1.0);
      p0 = p1;
      p1 = p2;
    }
    const double dp = -n * p0 / (-1.0);
    x[static_cast<std::size_t>(n / 2)] = 0.0;
    w[static_cast<std::size_t>(n / 2)] = 2.0 / (dp * dp);
  }
}

}  // namespace

QuadratureRule gauss_line_rule(int order) {
  if (order < 1) throw std::domain_error("gauss_line_rule: order >= 1 required");
  std::vector<double> x, w;
  legendre_nodes(order, x, w);
  QuadratureRule rule;
  rule.nodes.reserve(x.size());
  rule.weights.reserve(w.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    rule.nodes.push_back(0.5 * (x[i] + 1.0));
    rule.weights.push_back(0.5 * w[i]);
  }
  return rule;
}

QuadratureRule singular_line_rule(int order, int levels) {
  if (order < 1) throw std::domain_error("singular_line_rule: order >= 1 required");
  if (levels < 1) throw std::domain_error("singular_line_rule: levels >= 1 required");
  const QuadratureRule base = gauss_line_rule(order);

  const int q = std::min(4, 2 * order);
  // Deepest dyadic level whose graded closing panel still has all nodes
  // strictly below 1 in double precision, with ~12 bits to spare.
  const double vmin = base.nodes.front();
  const int cap = static_cast<int>(std::floor(40.0 + q * std::log2(vmin)));
  const int depth = std::max(0, std::min(levels, cap));

  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(depth + 1) * base.size());
  rule.weights.reserve(static_cast<std::size_t>(depth + 1) * base.size());
  for (int j = 0; j < depth; ++j) {
    const double a = 1.0 - std::ldexp(1.0, -j);
    const double width = std::ldexp(1.0, -j - 1);
    for (std::size_t i = 0; i < base.size(); ++i) {
      rule.nodes.push_back(a + width * base.nodes[i]);
      rule.weights.push_back(width * base.weights[i]);
    }
  }
  // closing panel [1 - h, 1]: 1 - s = h v^q
  const double h = std::ldexp(1.0, -depth);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const double v = base.nodes[i];
    rule.nodes.push_back(1.0 - h * std::pow(v, q));
    rule.weights.push_back(base.weights[i] * q * h * std::pow(v, q - 1));
  }
  return rule;
}

double DiskGrid::theta(int j) const { return 2.0 * std::numbers::pi * j / n_theta; }

cx DiskGrid::point(std::size_t i, int j) const {
  const double th = theta(j);
  return cx{radii[i] * std::cos(th), radii[i] * std::sin(th)};
}

DiskGrid disk_grid(int radial_order, int n_theta) {
  if (radial_order < 1) throw std::domain_error("disk_grid: radial_order >= 1 required");
  if (n_theta < 1) throw std::domain_error("disk_grid: n_theta >= 1 required");
  const QuadratureRule radial = gauss_line_rule(radial_order);
  DiskGrid grid;
  grid.n_theta = n_theta;
  grid.radii.reserve(radial.size());
  grid.radial_weights = radial.weights;
  for (double u : radial.nodes) grid.radii.push_back(std::sqrt(u));
  return grid;
}

}  // namespace htl
