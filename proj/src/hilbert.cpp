#include "htl/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace htl {

namespace {

void require_in_disk(cx z, const char* who) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error(std::string(who) + ": |z| < 1 required");
}

cx integer_power(cx w, int e) {
  cx acc{1.0, 0.0};
  for (int i = 0; i < e; ++i) acc *= w;
  return acc;
}

}  // namespace

HilbertEntryIndex::HilbertEntryIndex(std::vector<long long> idx) : indices(std::move(idx)) {
  if (indices.size() < 2) throw std::domain_error("HilbertEntryIndex: order m >= 2 required");
  for (long long i : indices)
    if (i < 0) throw std::domain_error("HilbertEntryIndex: indices must be >= 0");
}

double tensor_entry(const HilbertEntryIndex& idx) {
  long long sum = 0;
  for (long long i : idx.indices) sum += i;
  return 1.0 / (static_cast<double>(sum) + 1.0);
}

std::vector<cx> hilbert_matrix_apply(const std::vector<cx>& x, std::size_t out_len) {
  std::vector<cx> out(out_len);
  std::vector<cx> terms(x.size());
  for (std::size_t i = 0; i < out_len; ++i) {
    for (std::size_t j = 0; j < x.size(); ++j)
      terms[j] = x[j] / static_cast<double>(i + j + 1);
    out[i] = pairwise_sum<cx>(terms);
  }
  return out;
}

OperatorOutput apply_series(const PowerSeries& f, TensorOrder m, std::size_t out_len) {
  if (out_len == 0) throw std::invalid_argument("apply_series: out_len >= 1 required");
  // exact support of f^(m-1): degree (m-1)(n-1)
  const std::size_t b_len = (f.size() - 1) * static_cast<std::size_t>(m.power()) + 1;
  const PowerSeries b = power(f, m.power(), b_len);
  std::vector<cx> c = hilbert_matrix_apply(b.coeffs(), out_len);
  return OperatorOutput{PowerSeries(std::move(c)), f.size(), m.value()};
}

cx mobius_phi(double t, cx z) {
  const cx den = (t - 1.0) * z + 1.0;
  if (std::abs(den) < 1e-14) throw std::domain_error("mobius_phi: kernel denominator ~ 0");
  return t / den;
}

cx mobius_psi(double t, cx z) {
  const cx den = (t - 1.0) * z + 1.0;
  if (std::abs(den) < 1e-14) throw std::domain_error("mobius_psi: kernel denominator ~ 0");
  return 1.0 / den;
}

cx apply_integral(const PowerSeries& f, TensorOrder m, cx z, const QuadratureRule& rule) {
  require_in_disk(z, "apply_integral");
  IntegralEvaluator eval(f, m, rule);
  return eval(z);
}

cx apply_mobius(const PowerSeries& f, TensorOrder m, cx z, const QuadratureRule& rule) {
  require_in_disk(z, "apply_mobius");
  const int e = m.power();
  std::vector<cx> terms(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double t = rule.nodes[i];
    terms[i] = rule.weights[i] * integer_power(evaluate(f, mobius_phi(t, z)), e) * mobius_psi(t, z);
  }
  return pairwise_sum<cx>(terms);
}

cx slice_operator(const PowerSeries& f, TensorOrder m, double t, cx z) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("slice_operator: t in (0,1) required");
  require_in_disk(z, "slice_operator");
  return mobius_psi(t, z) * integer_power(evaluate(f, mobius_phi(t, z)), m.power());
}

IntegralEvaluator::IntegralEvaluator(const PowerSeries& f, TensorOrder m,
                                     const QuadratureRule& rule)
    : nodes_(rule.nodes), weighted_powers_(rule.size()) {
  const int e = m.power();
  for (std::size_t i = 0; i < rule.size(); ++i)
    weighted_powers_[i] = rule.weights[i] * integer_power(evaluate(f, cx{rule.nodes[i], 0.0}), e);
}

cx IntegralEvaluator::operator()(cx z) const {
  require_in_disk(z, "IntegralEvaluator");
  std::vector<cx> terms(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    terms[i] = weighted_powers_[i] / (1.0 - z * nodes_[i]);
  return pairwise_sum<cx>(terms);
}

}  // namespace htl
