#ifndef HTL_SERIES_HPP
#define HTL_SERIES_HPP

#include <string>
#include <vector>

#include "htl/numeric.hpp"

namespace htl {

// Truncated power series f(z) = sum_{k<N} c_k z^k, stored dense in ascending
// degree. Coefficients are immutable after construction; every arithmetic
// operation takes an explicit output length, nothing grows or shrinks
// silently.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<cx> coeffs);
  static PowerSeries from_real(const std::vector<double>& coeffs);
  static PowerSeries zero(std::size_t len);

  std::size_t size() const { return coeffs_.size(); }
  const cx& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<cx>& coeffs() const { return coeffs_; }

  bool is_zero() const;

 private:
  std::vector<cx> coeffs_;
};

// Order m >= 2 of the Hilbert tensor; the induced operator raises its
// argument to the power m-1.
class TensorOrder {
 public:
  explicit TensorOrder(int m);
  int value() const { return m_; }
  int power() const { return m_ - 1; }

 private:
  int m_;
};

// Horner evaluation of f at z. z must be finite; |z| < 1 is the caller's
// business when a disk-analytic reading is intended.
cx evaluate(const PowerSeries& f, cx z);

// Cauchy product truncated to out_len coefficients.
PowerSeries convolve(const PowerSeries& a, const PowerSeries& b, std::size_t out_len);

// f^e by repeated convolution, every step truncated to out_len. e >= 1.
PowerSeries power(const PowerSeries& f, int e, std::size_t out_len);

PowerSeries scale(const PowerSeries& f, cx factor);

// JSON wire format: array of [re, im] pairs in ascending degree; bare
// numbers are accepted on input as real coefficients.
PowerSeries parse_series_json(const std::string& text);
std::string series_to_json(const PowerSeries& f);

}  // namespace htl

#endif
