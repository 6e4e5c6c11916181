#pragma once

// Test-only helpers: deterministic generators and independent oracles.

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "recurconv/coefficient_model.hpp"
#include "recurconv/errors.hpp"
#include "recurconv/heun.hpp"
#include "recurconv/recurrence.hpp"

namespace testsupport {

using recurconv::complex;
using recurconv::PolynomialInN;
using recurconv::RationalIndexFunction;
using recurconv::RecurrenceSpec;

inline complex random_complex(std::mt19937_64& rng, double max_modulus) {
  std::uniform_real_distribution<double> radius(0.0, max_modulus);
  std::uniform_real_distribution<double> phase(-M_PI, M_PI);
  return std::polar(radius(rng), phase(rng));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Π (n + r_i)
inline PolynomialInN product_of_linear(const std::vector<complex>& shifts) {
  PolynomialInN p = PolynomialInN::constant(1.0);
  for (const auto& r : shifts) p = p * PolynomialInN{r, complex(1.0)};
  return p;
}

/// A coefficient L·Π(n+e_i)/Π(n+b_i) with Re b_i > 0 (never a pole at n ≥ 0), or for
/// zero_limit a numerator one degree lower.
inline RationalIndexFunction random_coefficient(std::mt19937_64& rng, complex limit, bool zero_limit,
                                                std::int64_t n_min) {
  const int degree = uniform_int(rng, zero_limit ? 1 : 0, 2);
  std::vector<complex> den_shifts, num_shifts;
  for (int i = 0; i < degree; ++i) den_shifts.emplace_back(uniform(rng, 0.5, 4.0), uniform(rng, -1.0, 1.0));
  const int num_degree = zero_limit ? degree - 1 : degree;
  for (int i = 0; i < num_degree; ++i) num_shifts.emplace_back(uniform(rng, -1.0, 4.0), uniform(rng, -1.0, 1.0));
  const complex scale = zero_limit ? random_complex(rng, 1.5) + 0.1 : limit;
  return {scale * product_of_linear(num_shifts), product_of_linear(den_shifts), n_min};
}

/// Random (k+1)-term spec with rational coefficients and finite limits of modulus ≤ max_limit.
inline RecurrenceSpec random_rational_spec(std::mt19937_64& rng, int k, double max_limit) {
  std::vector<RationalIndexFunction> coeffs;
  for (int l = 1; l <= k; ++l) {
    const bool zero_limit = uniform(rng, 0.0, 1.0) < 0.15;
    complex limit = random_complex(rng, max_limit);
    if (std::abs(limit) < 0.05) limit += 0.1;
    coeffs.push_back(random_coefficient(rng, limit, zero_limit, l - 1));
  }
  return RecurrenceSpec{std::move(coeffs)};
}

/// Direct substitution into the Heun coefficient formulas (the 1/(1+a) form, so a ≠ -1).
struct HeunOracle {
  recurconv::HeunParams p;
  complex lambda;

  complex den(double n) const {
    return n * n + (1.0 + p.gamma + 2.0 * lambda) * n + (1.0 + lambda) * (p.gamma + lambda);
  }
  complex a_bar(double n) const {
    const complex a = p.a;
    const complex lin = (p.alpha + p.beta - p.delta + 2.0 * lambda + a * (p.gamma + p.delta - 1.0 + 2.0 * lambda)) / (1.0 + a);
    const complex cst =
        (lambda * (p.alpha + p.beta - p.delta + lambda + a * (p.gamma + p.delta - 1.0 + lambda)) + p.q) / (1.0 + a);
    return (n * n + lin * n + cst) / den(n);
  }
  complex b_bar(double n) const {
    return (n * n + (p.alpha + p.beta - 2.0 + 2.0 * lambda) * n + (p.alpha - 1.0 + lambda) * (p.beta - 1.0 + lambda)) /
           den(n);
  }
  complex alpha1(double n) const { return (1.0 + p.a) / p.a * a_bar(n); }
  complex alpha2(double n) const { return -1.0 / p.a * b_bar(n); }
};

inline double relative_error(complex got, complex want) {
  const double scale = std::max(std::abs(got), std::abs(want));
  return scale == 0.0 ? 0.0 : std::abs(got - want) / scale;
}

/// Smallest N with |f(n)| ≤ bound on [N, horizon], by brute-force scan from n_min upward.
template <class F>
std::int64_t scan_tail(F&& f, double bound, std::int64_t n_min, std::int64_t horizon) {
  std::int64_t last_bad = n_min - 1;
  for (std::int64_t n = n_min; n <= horizon; ++n)
    if (std::abs(f(static_cast<double>(n))) > bound) last_bad = n;
  return last_bad + 1;
}

}  // namespace testsupport
