#include "htl/series.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace htl {

namespace {

bool finite(cx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

PowerSeries::PowerSeries(std::vector<cx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: need at least one coefficient");
  for (const cx& c : coeffs_)
    if (!finite(c)) throw std::invalid_argument("PowerSeries: non-finite coefficient");
}

PowerSeries PowerSeries::from_real(const std::vector<double>& coeffs) {
  std::vector<cx> c(coeffs.begin(), coeffs.end());
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::zero(std::size_t len) {
  if (len == 0) throw std::invalid_argument("PowerSeries: zero length");
  return PowerSeries(std::vector<cx>(len, cx{0.0, 0.0}));
}

bool PowerSeries::is_zero() const {
  for (const cx& c : coeffs_)
    if (c != cx{0.0, 0.0}) return false;
  return true;
}

TensorOrder::TensorOrder(int m) : m_(m) {
  if (m < 2) throw std::domain_error("TensorOrder: m >= 2 required");
}

cx evaluate(const PowerSeries& f, cx z) {
  if (!finite(z)) throw std::invalid_argument("evaluate: non-finite z");
  cx acc = f[f.size() - 1];
  for (std::size_t k = f.size() - 1; k-- > 0;) acc = acc * z + f[k];
  return acc;
}

PowerSeries convolve(const PowerSeries& a, const PowerSeries& b, std::size_t out_len) {
  if (out_len == 0) throw std::invalid_argument("convolve: out_len >= 1 required");
  std::vector<cx> out(out_len, cx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size() && i < out_len; ++i) {
    const cx ai = a[i];
    const std::size_t jmax = std::min(b.size(), out_len - i);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += ai * b[j];
  }
  return PowerSeries(std::move(out));
}

PowerSeries power(const PowerSeries& f, int e, std::size_t out_len) {
  if (e < 1) throw std::domain_error("power: exponent >= 1 required");
  if (out_len == 0) throw std::invalid_argument("power: out_len >= 1 required");
  std::vector<cx> base(out_len, cx{0.0, 0.0});
  for (std::size_t k = 0; k < f.size() && k < out_len; ++k) base[k] = f[k];
  PowerSeries result(std::move(base));
  for (int i = 1; i < e; ++i) result = convolve(result, f, out_len);
  return result;
}

PowerSeries scale(const PowerSeries& f, cx factor) {
  std::vector<cx> out(f.coeffs());
  for (cx& c : out) c *= factor;
  return PowerSeries(std::move(out));
}

PowerSeries parse_series_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("series: invalid JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("series: expected a non-empty JSON array");
  std::vector<cx> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_number()) {
      coeffs.emplace_back(item.get<double>(), 0.0);
    } else if (item.is_array() && item.size() == 2 && item[0].is_number() && item[1].is_number()) {
      coeffs.emplace_back(item[0].get<double>(), item[1].get<double>());
    } else {
      throw std::invalid_argument("series: coefficients must be numbers or [re, im] pairs");
    }
  }
  return PowerSeries(std::move(coeffs));
}

std::string series_to_json(const PowerSeries& f) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t k = 0; k < f.size(); ++k)
    j.push_back(nlohmann::json::array({f[k].real(), f[k].imag()}));
  return j.dump();
}

}  // namespace htl
