#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "htl/quadrature.hpp"
#include "htl/special.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("gamma: pinned values") {
  CHECK(htl::gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(htl::gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(htl::gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK_THROWS_AS(htl::gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(htl::gamma_fn(-1.5), std::domain_error);
}

TEST_CASE("gamma agrees with the standard library") {
  for (double x = 0.05; x <= 30.0; x += 0.173) {
    CHECK(htl::gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
    CHECK(htl::lgamma_fn(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
  }
}

TEST_CASE("gamma reflection identity on (0,1)") {
  for (int i = 1; i <= 100; ++i) {
    const double x = i / 101.0;
    const double value = htl::gamma_fn(x) * htl::gamma_fn(1.0 - x) * std::sin(kPi * x) / kPi;
    CHECK(value == doctest::Approx(1.0).epsilon(1e-11));
  }
}

TEST_CASE("gamma duplication identity on (0,10]") {
  for (int i = 1; i <= 100; ++i) {
    const double x = 10.0 * i / 100.0;
    const double lhs = htl::lgamma_fn(x) + htl::lgamma_fn(x + 0.5);
    const double rhs = (1.0 - 2.0 * x) * std::log(2.0) + 0.5 * std::log(kPi) + htl::lgamma_fn(2.0 * x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("beta: pinned values") {
  CHECK(htl::beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(htl::beta_fn(0.5, 0.5) == doctest::Approx(kPi).epsilon(1e-13));
  // the large-p bound derivation at p = 4: beta(2/p, 1-2/p) = pi/sin(pi/2)
  CHECK(htl::beta_fn(0.5, 0.5) == doctest::Approx(kPi / std::sin(kPi / 2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(htl::beta_fn(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(htl::beta_fn(1.0, -2.0), std::domain_error);
}

TEST_CASE("beta matches its defining integral under the singular rule") {
  // Both endpoint factors are lifted above exponent 2 first (the rule only
  // grades toward s = 1, and fractional powers at both ends would otherwise
  // dominate the error); the recursion beta(u,v) = beta(u+1,v) (u+v)/u maps
  // the quadrature value back.
  const htl::QuadratureRule rule = htl::singular_line_rule(16, 40);
  for (double u = 0.3; u <= 3.0; u += 0.27) {
    for (double v = 0.3; v <= 3.0; v += 0.27) {
      double uu = u, vv = v, factor = 1.0;
      while (uu < 3.0) {
        factor *= (uu + vv) / uu;
        uu += 1.0;
      }
      while (vv < 3.0) {
        factor *= (uu + vv) / vv;
        vv += 1.0;
      }
      const double integral = rule.integrate(
          [&](double t) { return std::pow(t, uu - 1.0) * std::pow(1.0 - t, vv - 1.0); });
      CHECK(std::abs(factor * integral - htl::beta_fn(u, v)) < 1e-7);
    }
  }
}

TEST_CASE("bound_constant: pinned values") {
  using htl::BoundRegime;
  CHECK(htl::bound_constant({BoundRegime::matrix_lp, 2.0, 2}) ==
        doctest::Approx(kPi).epsilon(1e-13));
  CHECK(htl::bound_constant({BoundRegime::tensor_large_p, 4.0, 2}) ==
        doctest::Approx(kPi).epsilon(1e-13));
  CHECK(htl::bound_constant({BoundRegime::tensor_small_p, 4.0, 2}) ==
        doctest::Approx(kPi).epsilon(1e-13));
  for (int m : {2, 4, 6}) {
    const double p = 4.0 * (m - 1);
    CHECK(htl::bound_constant({BoundRegime::fh_large_p, p, m}) ==
          doctest::Approx(std::pow(kPi, 1.0 / (m - 1))).epsilon(1e-13));
  }
}

TEST_CASE("bound_constant: regimes agree at their junction") {
  CHECK(htl::bound_constant({htl::BoundRegime::tensor_large_p, 4.0, 3}) ==
        doctest::Approx(htl::bound_constant({htl::BoundRegime::tensor_small_p, 4.0, 3}))
            .epsilon(1e-12));
  for (int m : {2, 3, 4, 6}) {
    const double p = 4.0 * (m - 1);
    CHECK(htl::bound_constant({htl::BoundRegime::fh_large_p, p, m}) ==
          doctest::Approx(htl::bound_constant({htl::BoundRegime::fh_small_p, p, m}))
              .epsilon(1e-12));
  }
}

TEST_CASE("bound_constant: domains and divergence") {
  using htl::BoundRegime;
  CHECK_THROWS_AS(htl::bound_constant({BoundRegime::matrix_lp, 1.0, 2}), std::domain_error);
  CHECK_THROWS_AS(htl::bound_constant({BoundRegime::tensor_large_p, 3.9, 2}), std::domain_error);
  CHECK_THROWS_AS(htl::bound_constant({BoundRegime::tensor_small_p, 2.0, 2}), std::domain_error);
  CHECK_THROWS_AS(htl::bound_constant({BoundRegime::tensor_small_p, 4.1, 2}), std::domain_error);
  CHECK_THROWS_AS(htl::bound_constant({BoundRegime::fh_large_p, 11.9, 4}), std::domain_error);
  CHECK_THROWS_AS(htl::bound_constant({BoundRegime::fh_small_p, 6.0, 4}), std::domain_error);
  CHECK_THROWS_AS(htl::bound_constant({BoundRegime::fh_small_p, 4.0, 1}), std::domain_error);

  // constants diverge at the lower edge; past the 1e15 threshold they report +inf
  const double p_edge = std::nextafter(2.0, 3.0);
  CHECK(std::isinf(htl::bound_constant({BoundRegime::tensor_small_p, p_edge, 2})));
  CHECK(std::isfinite(htl::bound_constant({BoundRegime::tensor_small_p, 2.1, 2})));
  // error messages name the violated inequality
  try {
    htl::bound_constant({BoundRegime::tensor_large_p, 3.0, 2});
    FAIL("expected domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("p >= 4") != std::string::npos);
  }
}

TEST_CASE("regime selectors") {
  CHECK(htl::tensor_regime(4.0) == htl::BoundRegime::tensor_large_p);
  CHECK(htl::tensor_regime(3.0) == htl::BoundRegime::tensor_small_p);
  CHECK_THROWS_AS(htl::tensor_regime(2.0), std::domain_error);
  CHECK(htl::fh_regime(12.0, 4) == htl::BoundRegime::fh_large_p);
  CHECK(htl::fh_regime(7.0, 4) == htl::BoundRegime::fh_small_p);
  CHECK_THROWS_AS(htl::fh_regime(6.0, 4), std::domain_error);
  CHECK(std::string(htl::regime_name(htl::regime_from_name("fh_small_p"))) == "fh_small_p");
  CHECK_THROWS_AS(htl::regime_from_name("bogus"), std::invalid_argument);
}
