#include "recurconv/recurrence.hpp"

#include <algorithm>
#include <string>

#include "recurconv/errors.hpp"

namespace recurconv {
namespace {

bool overflowed(complex v) {
  return !std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) > kOverflowThreshold;
}

}  // namespace

RecurrenceSpec::RecurrenceSpec(std::vector<RationalIndexFunction> coeffs)
    : coefficients(std::move(coeffs)) {
  if (coefficients.empty()) throw ValidationError("RecurrenceSpec: k must be at least 1");
  for (std::size_t l = 1; l <= coefficients.size(); ++l) {
    const auto& f = coefficients[l - 1];
    if (f.n_min() > static_cast<std::int64_t>(l) - 1)
      throw ValidationError("RecurrenceSpec: coefficient " + std::to_string(l) +
                            " must be valid from n = " + std::to_string(l - 1) +
                            " but n_min = " + std::to_string(f.n_min()));
  }
}

std::vector<complex> RecurrenceSpec::limits() const {
  std::vector<complex> out;
  out.reserve(coefficients.size());
  for (const auto& f : coefficients) out.push_back(limit_of(f));
  return out;
}

SequenceWindow run_constant(std::span<const complex> alphas, std::int64_t n_max) {
  SequenceWindow window;
  window.kind = SequenceKind::constant;
  if (n_max < 0) throw ValidationError("run_constant: n_max must be nonnegative");
  auto values = constant_sequence<complex>(alphas, n_max);
  auto bad = std::find_if(values.begin(), values.end(), overflowed);
  if (bad != values.end()) {
    window.overflow_index = bad - values.begin();
    values.erase(bad, values.end());
  }
  window.values = std::move(values);
  return window;
}

SequenceWindow run_variable(const RecurrenceSpec& spec, std::int64_t n_max) {
  if (n_max < 0) throw ValidationError("run_variable: n_max must be nonnegative");
  SequenceWindow window;
  window.kind = SequenceKind::variable;
  auto& d = window.values;
  d.reserve(static_cast<std::size_t>(n_max) + 1);
  d.push_back(complex(1));
  const std::size_t k = spec.coefficients.size();
  for (std::size_t j = 1; j <= static_cast<std::size_t>(n_max); ++j) {
    const auto n = static_cast<std::int64_t>(j) - 1;
    complex next(0);
    for (std::size_t i = 1; i <= std::min(j, k); ++i) next += spec.coefficients[i - 1](n) * d[j - i];
    if (overflowed(next)) {
      window.overflow_index = static_cast<std::int64_t>(j);
      break;
    }
    d.push_back(next);
  }
  return window;
}

std::vector<complex> partial_sums(const SequenceWindow& seq, complex x, std::int64_t m_max) {
  if (m_max > seq.n_max()) throw ValidationError("partial_sums: M exceeds the sequence window");
  std::vector<complex> sums;
  if (m_max < 0) return sums;
  sums.reserve(static_cast<std::size_t>(m_max) + 1);
  CompensatedSum acc;
  complex power(1);
  for (std::int64_t n = 0; n <= m_max; ++n) {
    acc.add(seq.values[static_cast<std::size_t>(n)] * power);
    sums.push_back(acc.value());
    power *= x;
  }
  return sums;
}

std::vector<std::vector<complex>> coefficient_table(const RecurrenceSpec& spec, std::int64_t n_max) {
  std::vector<std::vector<complex>> table;
  if (n_max < 0) return table;
  table.resize(static_cast<std::size_t>(n_max) + 1);
  const std::size_t k = spec.coefficients.size();
  for (std::int64_t n = 0; n <= n_max; ++n) {
    auto& row = table[static_cast<std::size_t>(n)];
    const std::size_t usable = std::min(k, static_cast<std::size_t>(n) + 1);
    row.reserve(usable);
    for (std::size_t l = 0; l < usable; ++l) row.push_back(spec.coefficients[l](n));
  }
  return table;
}

}  // namespace recurconv
