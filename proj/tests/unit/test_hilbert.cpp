#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "htl/hilbert.hpp"
#include "test_util.hpp"

using htl::cx;
using htl::PowerSeries;
using htl::TensorOrder;

namespace {

double dist(cx a, cx b) { return std::abs(a - b); }

// tail-safe truncation for evaluating H(f) as a series at |z| <= r
std::size_t safe_len(double r, double tol = 1e-9) {
  std::size_t k = 8;
  while (std::pow(r, static_cast<double>(k)) / ((k + 1) * (1.0 - r)) >= tol) ++k;
  return k;
}

}  // namespace

TEST_CASE("tensor_entry: definition and integral identity") {
  CHECK(htl::tensor_entry(htl::HilbertEntryIndex({0, 0, 0})) == 1.0);
  CHECK(htl::tensor_entry(htl::HilbertEntryIndex({1, 2, 3})) == doctest::Approx(1.0 / 7));

  // entry (2,0,1,0) equals the moment integral of t^3
  const htl::QuadratureRule rule = htl::gauss_line_rule(4);
  const double integral = rule.integrate([](double t) { return t * t * t; });
  CHECK(integral == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(htl::tensor_entry(htl::HilbertEntryIndex({2, 0, 1, 0})) ==
        doctest::Approx(integral).epsilon(1e-14));

  CHECK_THROWS_AS(htl::HilbertEntryIndex({1}), std::domain_error);
  CHECK_THROWS_AS(htl::HilbertEntryIndex({1, -1}), std::domain_error);
}

TEST_CASE("tensor_entry is symmetric under index permutations") {
  std::vector<long long> idx{0, 1, 2, 5};
  const double value = htl::tensor_entry(htl::HilbertEntryIndex(idx));
  std::sort(idx.begin(), idx.end());
  do {
    CHECK(htl::tensor_entry(htl::HilbertEntryIndex(idx)) == value);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("hilbert_matrix_apply: columns and row sums") {
  const auto col0 = htl::hilbert_matrix_apply({cx{1, 0}}, 3);
  CHECK(dist(col0[0], cx{1, 0}) == 0.0);
  CHECK(dist(col0[1], cx{0.5, 0}) == 0.0);
  CHECK(dist(col0[2], cx{1.0 / 3, 0}) == 0.0);

  const auto col1 = htl::hilbert_matrix_apply({cx{0, 0}, cx{1, 0}}, 2);
  CHECK(dist(col1[0], cx{0.5, 0}) == 0.0);
  CHECK(dist(col1[1], cx{1.0 / 3, 0}) == 0.0);

  const auto row = htl::hilbert_matrix_apply({cx{1, 0}, cx{1, 0}, cx{1, 0}, cx{1, 0}}, 1);
  CHECK(dist(row[0], cx{25.0 / 12, 0}) < 1e-15);
}

TEST_CASE("apply_series: constant and shifted inputs") {
  const PowerSeries one = PowerSeries::from_real({1.0});
  const auto m2 = htl::apply_series(one, TensorOrder(2), 4);
  for (std::size_t k = 0; k < 4; ++k)
    CHECK(dist(m2.series[k], cx{1.0 / static_cast<double>(k + 1), 0}) == 0.0);

  // constant f: f^2 = 1, same first column
  const auto m3 = htl::apply_series(one, TensorOrder(3), 3);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(dist(m3.series[k], cx{1.0 / static_cast<double>(k + 1), 0}) == 0.0);

  const auto shifted = htl::apply_series(PowerSeries::from_real({0.0, 1.0}), TensorOrder(2), 3);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(dist(shifted.series[k], cx{1.0 / static_cast<double>(k + 2), 0}) == 0.0);
}

TEST_CASE("apply_series matches the multi-index brute force") {
  std::mt19937_64 rng(41);
  for (int m : {2, 3, 4}) {
    const PowerSeries f = htl::test::random_complex_series(rng, 5);
    const auto got = htl::apply_series(f, TensorOrder(m), 8);
    const auto want = htl::test::brute_apply_coeffs(f, m, 8);
    for (std::size_t k = 0; k < 8; ++k)
      CHECK(dist(got.series[k], want[k]) <= 1e-12 * (1.0 + std::abs(want[k])));
  }
}

TEST_CASE("apply_series: homogeneity of degree m-1 in complex scalars") {
  std::mt19937_64 rng(43);
  for (int m : {2, 3, 4}) {
    const PowerSeries f = htl::test::random_complex_series(rng, 6);
    const cx alpha{1.3, -0.7};
    const auto base = htl::apply_series(f, TensorOrder(m), 10);
    const auto scaled = htl::apply_series(htl::scale(f, alpha), TensorOrder(m), 10);
    cx factor{1.0, 0.0};
    for (int i = 1; i < m; ++i) factor *= alpha;
    for (std::size_t k = 0; k < 10; ++k)
      CHECK(dist(scaled.series[k], factor * base.series[k]) <=
            1e-12 * (1.0 + std::abs(factor * base.series[k])));
  }
}

TEST_CASE("apply_series: positivity and m = 2 matrix consistency") {
  std::mt19937_64 rng(47);
  const PowerSeries f = htl::test::random_real_series(rng, 6, 0.0, 1.0);
  const auto out = htl::apply_series(f, TensorOrder(3), 12);
  for (std::size_t k = 0; k < out.series.size(); ++k) {
    CHECK(out.series[k].imag() == 0.0);
    CHECK(out.series[k].real() >= 0.0);
  }

  const PowerSeries g = htl::test::random_complex_series(rng, 7);
  const auto via_operator = htl::apply_series(g, TensorOrder(2), 9);
  const auto via_matrix = htl::hilbert_matrix_apply(g.coeffs(), 9);
  for (std::size_t k = 0; k < 9; ++k) CHECK(dist(via_operator.series[k], via_matrix[k]) == 0.0);

  CHECK_THROWS_AS(htl::apply_series(f, TensorOrder(3), 0), std::invalid_argument);
}

TEST_CASE("apply_integral: closed forms") {
  const htl::QuadratureRule rule = htl::singular_line_rule(16, 40);
  const PowerSeries one = PowerSeries::from_real({1.0});

  CHECK(dist(htl::apply_integral(one, TensorOrder(2), cx{0, 0}, rule), cx{1, 0}) < 1e-14);

  // integral of 1/(1-zs) = -log(1-z)/z at z = 0.5
  const cx at_half = htl::apply_integral(one, TensorOrder(2), cx{0.5, 0}, rule);
  CHECK(dist(at_half, cx{2.0 * std::log(2.0), 0}) < 1e-12);
  CHECK(at_half.real() == doctest::Approx(1.3862943611).epsilon(1e-9));

  const PowerSeries z = PowerSeries::from_real({0.0, 1.0});
  CHECK(dist(htl::apply_integral(z, TensorOrder(3), cx{0, 0}, rule), cx{1.0 / 3, 0}) < 1e-14);

  CHECK_THROWS_AS(htl::apply_integral(one, TensorOrder(2), cx{1.0, 0}, rule), std::domain_error);
}

TEST_CASE("mobius kernels") {
  CHECK(dist(htl::mobius_phi(0.3, cx{0, 0}), cx{0.3, 0}) == 0.0);
  CHECK(dist(htl::mobius_psi(0.3, cx{0, 0}), cx{1, 0}) == 0.0);
  CHECK(dist(htl::mobius_phi(1.0, cx{0.4, 0.2}), cx{1, 0}) < 1e-15);
  CHECK(dist(htl::mobius_psi(1.0, cx{0.4, 0.2}), cx{1, 0}) < 1e-15);

  const cx phi = htl::mobius_phi(0.5, cx{0, 0.5});
  CHECK(dist(phi, 0.5 / cx{1.0, -0.25}) < 1e-15);
  CHECK(std::abs(phi) <= 1.0);

  // |phi| <= 1 over a sweep of (t, z)
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const double t = htl::test::uniform(rng, 0.0, 1.0);
    const double r = htl::test::uniform(rng, 0.0, 0.999);
    const double th = htl::test::uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const cx z{r * std::cos(th), r * std::sin(th)};
    CHECK(std::abs(htl::mobius_phi(t, z)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("apply_mobius: identities") {
  const htl::QuadratureRule rule = htl::singular_line_rule(16, 40);
  const PowerSeries one = PowerSeries::from_real({1.0});

  // constant integrand: both paths integrate psi only
  for (int m : {2, 3, 4}) {
    const cx a = htl::apply_mobius(one, TensorOrder(m), cx{0.3, 0}, rule);
    const cx b = htl::apply_integral(one, TensorOrder(m), cx{0.3, 0}, rule);
    CHECK(dist(a, b) < 1e-12);
  }

  const PowerSeries f = PowerSeries::from_real({1.0, 1.0});
  CHECK(dist(htl::apply_mobius(f, TensorOrder(2), cx{0.4, 0}, rule),
             htl::apply_integral(f, TensorOrder(2), cx{0.4, 0}, rule)) < 1e-8);

  // z = 0 collapses to the first output coefficient
  std::mt19937_64 rng(59);
  const PowerSeries g = htl::test::random_complex_series(rng, 5);
  const cx via_mobius = htl::apply_mobius(g, TensorOrder(3), cx{0, 0}, rule);
  const auto series = htl::apply_series(g, TensorOrder(3), 1);
  CHECK(dist(via_mobius, series.series[0]) < 1e-12);
}

TEST_CASE("slice_operator: pointwise identities and t-integral") {
  const htl::QuadratureRule rule = htl::gauss_line_rule(64);
  const PowerSeries one = PowerSeries::from_real({1.0});
  const cx z{0.3, 0.4};
  CHECK(dist(htl::slice_operator(one, TensorOrder(3), 0.25, z), htl::mobius_psi(0.25, z)) == 0.0);

  std::mt19937_64 rng(61);
  const PowerSeries f = htl::test::random_complex_series(rng, 5);
  const cx at_zero = htl::slice_operator(f, TensorOrder(3), 0.37, cx{0, 0});
  const cx fw = htl::evaluate(f, cx{0.37, 0});
  CHECK(dist(at_zero, fw * fw) < 1e-14);

  // integrating the slices over t recovers the Mobius path
  const cx integral =
      rule.integrate([&](double t) { return htl::slice_operator(f, TensorOrder(3), t, z); });
  CHECK(dist(integral, htl::apply_mobius(f, TensorOrder(3), z, rule)) < 1e-10);

  CHECK_THROWS_AS(htl::slice_operator(f, TensorOrder(3), 0.0, z), std::domain_error);
  CHECK_THROWS_AS(htl::slice_operator(f, TensorOrder(3), 1.0, z), std::domain_error);
  CHECK_THROWS_AS(htl::slice_operator(f, TensorOrder(3), 0.5, cx{1.2, 0}), std::domain_error);
}

TEST_CASE("three evaluation paths agree on polynomials") {
  const htl::QuadratureRule rule = htl::singular_line_rule(16, 40);
  std::mt19937_64 rng(67);
  for (int m : {2, 3, 4}) {
    for (int trial = 0; trial < 6; ++trial) {
      const std::size_t len = 1 + static_cast<std::size_t>(htl::test::uniform(rng, 0, 8));
      const PowerSeries f = htl::test::random_real_series(rng, len);
      // tail tolerance covers ||f^{m-1}||_1 up to ~1e3
      const std::size_t K = safe_len(0.9, 1e-12);
      const auto series_out = htl::apply_series(f, TensorOrder(m), K);
      for (double r : {0.25, 0.6, 0.9}) {
        for (double th : {0.0, 1.1, 2.9, 4.4}) {
          const cx z{r * std::cos(th), r * std::sin(th)};
          const cx via_series = htl::evaluate(series_out.series, z);
          const cx via_integral = htl::apply_integral(f, TensorOrder(m), z, rule);
          const cx via_mobius = htl::apply_mobius(f, TensorOrder(m), z, rule);
          CHECK(dist(via_series, via_integral) < 1e-8);
          CHECK(dist(via_integral, via_mobius) < 1e-8);
          CHECK(dist(via_series, via_mobius) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("IntegralEvaluator matches apply_integral") {
  const htl::QuadratureRule rule = htl::singular_line_rule(16, 40);
  std::mt19937_64 rng(71);
  const PowerSeries f = htl::test::random_complex_series(rng, 6);
  const htl::IntegralEvaluator eval(f, TensorOrder(3), rule);
  for (int trial = 0; trial < 10; ++trial) {
    const double r = htl::test::uniform(rng, 0.0, 0.9);
    const double th = htl::test::uniform(rng, 0.0, 6.28);
    const cx z{r * std::cos(th), r * std::sin(th)};
    CHECK(dist(eval(z), htl::apply_integral(f, TensorOrder(3), z, rule)) == 0.0);
  }
}
