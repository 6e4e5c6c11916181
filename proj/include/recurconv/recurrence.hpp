#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "recurconv/coefficient_model.hpp"

namespace recurconv {

/// d_{n+1} = Σ_{l=1..k} α_{l,n} d_{n+1-l}, a (k+1)-term relation.
///
/// Seeds follow the same formula truncated at d_0: d_j = Σ_{i=1..j} α_{i,j-1} d_{j-i}
/// for 1 ≤ j ≤ k-1, so coefficient l is first needed at n = l-1 and must be valid
/// there (n_min ≤ l-1).
struct RecurrenceSpec {
  std::vector<RationalIndexFunction> coefficients;

  explicit RecurrenceSpec(std::vector<RationalIndexFunction> coeffs);

  int k() const noexcept { return static_cast<int>(coefficients.size()); }
  /// First n at which the full (k+1)-term relation (rather than a seed) applies.
  std::int64_t start_index() const noexcept { return k() - 1; }
  std::vector<complex> limits() const;
};

enum class SequenceKind { constant, variable };

struct SequenceWindow {
  std::vector<complex> values;
  SequenceKind kind = SequenceKind::constant;
  /// First index whose modulus exceeded kOverflowThreshold (or was non-finite);
  /// values stop just before it.
  std::optional<std::int64_t> overflow_index;

  std::int64_t n_max() const noexcept { return static_cast<std::int64_t>(values.size()) - 1; }
};

inline constexpr double kOverflowThreshold = 1e300;

/// c_{k+1,n} for constant coefficients, in any field type (complex, exact rationals, ...).
/// Entry 0 is 1; entry j is Σ_{i=1..min(j,k)} alphas[i-1]·c_{j-i}.
template <class Scalar>
std::vector<Scalar> constant_sequence(std::span<const Scalar> alphas, std::int64_t n_max) {
  std::vector<Scalar> c;
  if (n_max < 0) return c;
  c.reserve(static_cast<std::size_t>(n_max) + 1);
  c.push_back(Scalar(1));
  const std::size_t k = alphas.size();
  for (std::size_t j = 1; j <= static_cast<std::size_t>(n_max); ++j) {
    Scalar next(0);
    for (std::size_t i = 1; i <= std::min(j, k); ++i) next += alphas[i - 1] * c[j - i];
    c.push_back(next);
  }
  return c;
}

SequenceWindow run_constant(std::span<const complex> alphas, std::int64_t n_max);

SequenceWindow run_variable(const RecurrenceSpec& spec, std::int64_t n_max);

/// S_m = Σ_{n≤m} values[n]·x^n for m = 0..M, accumulated with Neumaier compensation.
std::vector<complex> partial_sums(const SequenceWindow& seq, complex x, std::int64_t m_max);

/// α_{l,n} for n = 0..n_max; row n holds the coefficients usable at that n
/// (min(k, n+1) of them).
std::vector<std::vector<complex>> coefficient_table(const RecurrenceSpec& spec, std::int64_t n_max);

/// Compensated complex accumulator (Neumaier, per component).
class CompensatedSum {
 public:
  void add(complex term) noexcept {
    add_component(re_, re_err_, term.real());
    add_component(im_, im_err_, term.imag());
  }
  complex value() const noexcept { return {re_ + re_err_, im_ + im_err_}; }

 private:
  static void add_component(double& sum, double& err, double x) noexcept {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      err += (sum - t) + x;
    else
      err += (x - t) + sum;
    sum = t;
  }
  double re_ = 0.0, re_err_ = 0.0, im_ = 0.0, im_err_ = 0.0;
};

}  // namespace recurconv
