#ifndef HTL_HILBERT_HPP
#define HTL_HILBERT_HPP

#include <vector>

#include "htl/quadrature.hpp"
#include "htl/series.hpp"

namespace htl {

// Index (i_1 ... i_m) into the order-m Hilbert tensor; m = indices.size().
struct HilbertEntryIndex {
  std::vector<long long> indices;

  explicit HilbertEntryIndex(std::vector<long long> idx);
};

// H_{i_1...i_m} = 1/(i_1 + ... + i_m + 1).
double tensor_entry(const HilbertEntryIndex& idx);

// Result of applying the tensor operator: the output series, the input
// truncation it came from, and the order.
struct OperatorOutput {
  PowerSeries series;
  std::size_t source_trunc;
  int m;
};

// Classical Hilbert matrix action y_i = sum_j x_j/(i+j+1), i < out_len.
// The j-sum always runs over the full input.
std::vector<cx> hilbert_matrix_apply(const std::vector<cx>& x, std::size_t out_len);

// Coefficient path: b = f^(m-1) kept at its exact support length, then the
// Hilbert matrix action c_k = sum_j b_j/(k+j+1). Truncation only limits the
// output index k, never the inner sum.
OperatorOutput apply_series(const PowerSeries& f, TensorOrder m, std::size_t out_len);

// Mobius kernels from the boundedness proof: phi(t,z) = t/((t-1)z+1),
// psi(t,z) = 1/((t-1)z+1). |phi| <= 1 on t in [0,1], |z| < 1.
cx mobius_phi(double t, cx z);
cx mobius_psi(double t, cx z);

// Direct integral path: integral_0^1 f(s)^(m-1)/(1-zs) ds, |z| < 1.
cx apply_integral(const PowerSeries& f, TensorOrder m, cx z, const QuadratureRule& rule);

// Mobius-transformed path: integral_0^1 f(phi(t,z))^(m-1) psi(t,z) dt.
cx apply_mobius(const PowerSeries& f, TensorOrder m, cx z, const QuadratureRule& rule);

// Slice integrand T_t(f)(z) = psi(t,z) f(phi(t,z))^(m-1); apply_mobius is
// its integral over t.
cx slice_operator(const PowerSeries& f, TensorOrder m, double t, cx z);

// Precomputed direct-integral evaluator: f(s_i)^(m-1) at the rule nodes is
// fixed per series, so evaluating H(f) at many z costs one pass over the
// nodes each.
class IntegralEvaluator {
 public:
  IntegralEvaluator(const PowerSeries& f, TensorOrder m, const QuadratureRule& rule);
  cx operator()(cx z) const;

 private:
  std::vector<double> nodes_;
  std::vector<cx> weighted_powers_;  // w_i * f(s_i)^(m-1)
};

}  // namespace htl

#endif
