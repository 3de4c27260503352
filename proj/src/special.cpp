#include "htl/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace htl {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos, g = 607/128, 15 coefficients (Godfrey). Relative error ~1e-15
// over the positive real axis.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

double lanczos_series(double x) {
  double acc = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) acc += kLanczos[k] / (x - 1.0 + k);
  return acc;
}

void require_positive(double x, const char* who) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << who << ": argument " << x << " must be > 0";
    throw std::domain_error(msg.str());
  }
}

[[noreturn]] void regime_violation(const char* regime, const char* inequality, double p, int m) {
  std::ostringstream msg;
  msg << "bound_constant(" << regime << "): requires " << inequality << " (got p = " << p
      << ", m = " << m << ")";
  throw std::domain_error(msg.str());
}

// Divergence threshold: the small-p constants blow up at the lower regime
// edge; values past 1e15 are reported as +infinity.
double clamp_huge(double log_value) {
  if (log_value > std::log(1e15)) return std::numeric_limits<double>::infinity();
  return std::exp(log_value);
}

}  // namespace

double gamma_fn(double x) {
  require_positive(x, "gamma");
  if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
  const double t = x + kLanczosG - 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * lanczos_series(x);
}

double lgamma_fn(double x) {
  require_positive(x, "lgamma");
  if (x < 0.5) return std::log(kPi / std::sin(kPi * x)) - lgamma_fn(1.0 - x);
  const double t = x + kLanczosG - 0.5;
  return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(t) - t + std::log(lanczos_series(x));
}

double beta_fn(double u, double v) {
  require_positive(u, "beta");
  require_positive(v, "beta");
  return std::exp(lgamma_fn(u) + lgamma_fn(v) - lgamma_fn(u + v));
}

double bound_constant(const BoundConstantSpec& spec) {
  const double p = spec.p;
  const int m = spec.m;
  if (m < 2) throw std::domain_error("bound_constant: m >= 2 required");
  switch (spec.regime) {
    case BoundRegime::matrix_lp: {
      if (!(p > 1.0)) regime_violation("matrix_lp", "1 < p", p, m);
      return clamp_huge(std::log(kPi) - std::log(std::sin(kPi / p)));
    }
    case BoundRegime::tensor_large_p: {
      if (!(p >= 4.0)) regime_violation("tensor_large_p", "p >= 4", p, m);
      return kPi / std::sin(2.0 * kPi / p);
    }
    case BoundRegime::tensor_small_p: {
      if (!(p > 2.0 && p <= 4.0)) regime_violation("tensor_small_p", "2 < p <= 4", p, m);
      const double a = 2.0 / p;
      const double log_value = (4.0 / p - 1.0) * std::log(4.0) + 0.5 * std::log(kPi) +
                               lgamma_fn(1.0 - a) - lgamma_fn(1.5 - a);
      return clamp_huge(log_value);
    }
    case BoundRegime::fh_large_p: {
      if (!(p >= 4.0 * (m - 1))) regime_violation("fh_large_p", "p >= 4(m-1)", p, m);
      const double log_value =
          (std::log(kPi) - std::log(std::sin(2.0 * (m - 1) * kPi / p))) / (m - 1);
      return clamp_huge(log_value);
    }
    case BoundRegime::fh_small_p: {
      if (!(p > 2.0 * (m - 1) && p <= 4.0 * (m - 1)))
        regime_violation("fh_small_p", "2(m-1) < p <= 4(m-1)", p, m);
      const double a = 2.0 * (m - 1) / p;
      const double inner =
          0.5 * std::log(kPi) + lgamma_fn(1.0 - a) - std::log(4.0) - lgamma_fn(1.5 - a);
      return clamp_huge((4.0 / p) * std::log(4.0) + inner / (m - 1));
    }
  }
  throw std::logic_error("bound_constant: unknown regime");
}

const char* regime_name(BoundRegime regime) {
  switch (regime) {
    case BoundRegime::matrix_lp: return "matrix_lp";
    case BoundRegime::tensor_large_p: return "tensor_large_p";
    case BoundRegime::tensor_small_p: return "tensor_small_p";
    case BoundRegime::fh_large_p: return "fh_large_p";
    case BoundRegime::fh_small_p: return "fh_small_p";
  }
  return "?";
}

BoundRegime regime_from_name(const std::string& name) {
  if (name == "matrix_lp") return BoundRegime::matrix_lp;
  if (name == "tensor_large_p") return BoundRegime::tensor_large_p;
  if (name == "tensor_small_p") return BoundRegime::tensor_small_p;
  if (name == "fh_large_p") return BoundRegime::fh_large_p;
  if (name == "fh_small_p") return BoundRegime::fh_small_p;
  throw std::invalid_argument("unknown regime: " + name);
}

BoundRegime tensor_regime(double p) {
  if (!(p > 2.0)) throw std::domain_error("tensor bound: 2 < p required");
  return p >= 4.0 ? BoundRegime::tensor_large_p : BoundRegime::tensor_small_p;
}

BoundRegime fh_regime(double p, int m) {
  if (m < 2) throw std::domain_error("fh bound: m >= 2 required");
  if (!(p > 2.0 * (m - 1))) throw std::domain_error("fh bound: 2(m-1) < p required");
  return p >= 4.0 * (m - 1) ? BoundRegime::fh_large_p : BoundRegime::fh_small_p;
}

}  // namespace htl
