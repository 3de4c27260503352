#ifndef HTL_SPECIAL_HPP
#define HTL_SPECIAL_HPP

#include <string>

namespace htl {

// Gamma for real x > 0, Lanczos approximation (g = 607/128, 15 terms),
// good to ~14 significant digits on the range this library uses.
double gamma_fn(double x);

// log Gamma for real x > 0.
double lgamma_fn(double x);

// beta(u,v) = Gamma(u)Gamma(v)/Gamma(u+v), computed in log space.
double beta_fn(double u, double v);

// Which closed-form operator-norm constant is requested.
//   matrix_lp:      pi/sin(pi/p),                          1 < p
//   tensor_large_p: pi/sin(2 pi/p),                        p >= 4
//   tensor_small_p: 4^(4/p-1) sqrt(pi) G(1-2/p)/G(3/2-2/p), 2 < p <= 4
//   fh_large_p:     (pi/sin(2(m-1) pi/p))^(1/(m-1)),       p >= 4(m-1)
//   fh_small_p:     4^(4/p) (sqrt(pi) G(1-2(m-1)/p) / (4 G(3/2-2(m-1)/p)))^(1/(m-1)),
//                                                          2(m-1) < p <= 4(m-1)
enum class BoundRegime { matrix_lp, tensor_large_p, tensor_small_p, fh_large_p, fh_small_p };

struct BoundConstantSpec {
  BoundRegime regime;
  double p = 0.0;
  int m = 2;
};

// The constant for the given regime. Throws std::domain_error naming the
// violated inequality when (p, m) is outside the regime's domain. Values
// above 1e15 (the constants diverge as p approaches the lower regime edge)
// are reported as +infinity.
double bound_constant(const BoundConstantSpec& spec);

const char* regime_name(BoundRegime regime);
BoundRegime regime_from_name(const std::string& name);

// Regime selector for the two-regime tensor bound: large for p >= 4, small
// for 2 < p <= 4.
BoundRegime tensor_regime(double p);
BoundRegime fh_regime(double p, int m);

}  // namespace htl

#endif
