#ifndef HTL_TEST_UTIL_HPP
#define HTL_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "htl/numeric.hpp"
#include "htl/series.hpp"

namespace htl::test {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * canonical_unit(rng());
}

inline PowerSeries random_real_series(std::mt19937_64& rng, std::size_t len, double lo = -1.0,
                                      double hi = 1.0) {
  std::vector<double> c(len);
  for (double& v : c) v = uniform(rng, lo, hi);
  return PowerSeries::from_real(c);
}

inline PowerSeries random_complex_series(std::mt19937_64& rng, std::size_t len, double lo = -1.0,
                                         double hi = 1.0) {
  std::vector<cx> c(len);
  for (cx& v : c) v = cx{uniform(rng, lo, hi), uniform(rng, lo, hi)};
  return PowerSeries(std::move(c));
}

// Coefficients of f^e by raw multi-index summation; the independent oracle
// for everything the convolution cascade produces.
inline std::vector<cx> brute_power_coeffs(const PowerSeries& f, int e, std::size_t out_len) {
  std::vector<cx> out(out_len, cx{0.0, 0.0});
  std::vector<std::size_t> idx(static_cast<std::size_t>(e), 0);
  while (true) {
    std::size_t degree = 0;
    cx prod{1.0, 0.0};
    for (std::size_t l = 0; l < idx.size(); ++l) {
      degree += idx[l];
      prod *= f[idx[l]];
    }
    if (degree < out_len) out[degree] += prod;
    // odometer over e indices, each in [0, f.size())
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == f.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return out;
}

// H(f) coefficients by raw multi-index summation over (i_2, ..., i_m):
// c_k = sum a_{i_2} ... a_{i_m} / (k + i_2 + ... + i_m + 1).
inline std::vector<cx> brute_apply_coeffs(const PowerSeries& f, int m, std::size_t out_len) {
  std::vector<cx> out(out_len, cx{0.0, 0.0});
  std::vector<std::size_t> idx(static_cast<std::size_t>(m - 1), 0);
  while (true) {
    std::size_t degree = 0;
    cx prod{1.0, 0.0};
    for (std::size_t l = 0; l < idx.size(); ++l) {
      degree += idx[l];
      prod *= f[idx[l]];
    }
    for (std::size_t k = 0; k < out_len; ++k)
      out[k] += prod / static_cast<double>(k + degree + 1);
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == f.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return out;
}

}  // namespace htl::test

#endif
