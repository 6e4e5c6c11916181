#include "recurconv/generating_function.hpp"

#include <cmath>

#include "recurconv/errors.hpp"

namespace recurconv {

using boost::multiprecision::cpp_int;

complex gf_value(std::span<const complex> alphas, complex x) {
  complex denominator(1);
  complex power(1);
  for (const complex a : alphas) {
    power *= x;
    denominator -= a * power;
  }
  if (std::abs(denominator) < kPoleTolerance)
    throw PoleAtX("gf_value: x lies on the characteristic variety 1 - Σ α_j x^j = 0");
  return 1.0 / denominator;
}

namespace {

struct TupleEnumerator {
  std::span<const Rational> alphas;
  std::vector<cpp_int> factorial;
  std::vector<int> counts;
  Rational total = 0;

  cpp_int multinomial() const {
    int parts = 0;
    cpp_int denom = 1;
    for (const int c : counts) {
      parts += c;
      denom *= factorial[static_cast<std::size_t>(c)];
    }
    return factorial[static_cast<std::size_t>(parts)] / denom;
  }

  // Choose the multiplicity of part size `part` (largest first), then recurse on smaller parts.
  void descend(int part, int remaining) {
    if (remaining == 0) {
      Rational term = Rational(multinomial());
      for (std::size_t j = 0; j < counts.size(); ++j)
        for (int r = 0; r < counts[j]; ++r) term *= alphas[j];
      total += term;
      return;
    }
    if (part == 0) return;
    const auto slot = static_cast<std::size_t>(part - 1);
    for (int c = remaining / part; c >= 0; --c) {
      counts[slot] = c;
      descend(part - 1, remaining - c * part);
    }
    counts[slot] = 0;
  }
};

}  // namespace

Rational multinomial_coefficient(std::span<const Rational> alphas, int n) {
  if (n < 0) throw ValidationError("multinomial_coefficient: n must be nonnegative");
  if (n == 0) return Rational(1);
  TupleEnumerator e{alphas, {}, std::vector<int>(alphas.size(), 0), 0};
  e.factorial.resize(static_cast<std::size_t>(n) + 1);
  e.factorial[0] = 1;
  for (int i = 1; i <= n; ++i) e.factorial[static_cast<std::size_t>(i)] = e.factorial[static_cast<std::size_t>(i - 1)] * i;
  e.descend(static_cast<int>(alphas.size()), n);
  return e.total;
}

double abs_majorant_value(std::span<const complex> alphas, complex x) {
  const double r = std::abs(x);
  double sum = 0.0;
  double power = 1.0;
  for (const complex a : alphas) {
    power *= r;
    sum += std::abs(a) * power;
  }
  if (!(sum < 1.0)) throw OutsideDomain("abs_majorant_value: Σ|α_j x^j| ≥ 1");
  return 1.0 / (1.0 - sum);
}

}  // namespace recurconv
