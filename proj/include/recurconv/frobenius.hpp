#pragma once

#include <vector>

#include "recurconv/recurrence.hpp"

namespace recurconv {

/// a_j(x) y^{(j)} + ... + a_1(x) y' + a_0(x) y = 0 with polynomial coefficients.
/// coefficients[i] multiplies y^{(i)}.
struct ODESpec {
  std::vector<PolynomialInN> coefficients;

  int order() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  /// Throws ValidationError on an empty spec, zero leading coefficient or non-finite entries.
  void validate() const;
};

/// Polynomial in λ whose roots are the admissible exponents at x = 0.
/// Throws UnsupportedExpansionPoint when 0 is an irregular singular point.
PolynomialInN indicial_polynomial(const ODESpec& ode);

/// Roots of indicial_polynomial, sorted by descending real part (then imaginary part).
std::vector<complex> indicial_exponents(const ODESpec& ode);

/// Substitutes y = Σ d_n x^{n+λ} and normalizes the collected relation to
/// d_{n+1} = Σ_l α_{l,n} d_{n+1-l}.
RecurrenceSpec derive_recurrence(const ODESpec& ode, complex lambda);

struct ODEResidual {
  complex residual;
  /// Σ_i |a_i(x)| Σ_n |d_n (n+λ)_i x^{n+λ-i}|
  double scale = 0.0;
  double relative() const noexcept { return scale == 0.0 ? std::abs(residual) : std::abs(residual) / scale; }
};

/// Σ_i a_i(x) y^{(i)}(x) for y = Σ_{n≤M} d_n x^{n+λ}, derivatives taken termwise.
ODEResidual ode_residual(const ODESpec& ode, const SequenceWindow& seq, complex lambda, complex x,
                         std::int64_t terms);

}  // namespace recurconv
