#ifndef HTL_NUMERIC_HPP
#define HTL_NUMERIC_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace htl {

using cx = std::complex<double>;

// Numerical anomaly that should stop a run rather than be absorbed: an
// empirical ratio above a proved bound, a failed internal self-check.
class AnomalyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pairwise (tree) reduction over a contiguous buffer. All reductions in the
// library go through this so results are reproducible across platforms
// regardless of how the terms were produced.
template <typename T>
T pairwise_sum(std::span<const T> terms) {
  const std::size_t n = terms.size();
  if (n == 0) return T{};
  if (n <= 16) {
    T acc = terms[0];
    for (std::size_t i = 1; i < n; ++i) acc += terms[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& terms) {
  return pairwise_sum(std::span<const T>(terms));
}

// splitmix64; used to derive independent RNG streams from (seed, index).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Canonical uniform double in [0,1) from a 64-bit word. std::uniform_real_distribution
// is implementation-defined; this is not.
inline double canonical_unit(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace htl

#endif
