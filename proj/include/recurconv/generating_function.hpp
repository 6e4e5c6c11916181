#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "recurconv/polynomial.hpp"

namespace recurconv {

using Rational = boost::multiprecision::cpp_rational;

/// 1 / (1 - Σ α_j x^j). Throws PoleAtX when the denominator is below 1e-14 in modulus.
complex gf_value(std::span<const complex> alphas, complex x);

/// Σ over (i_1..i_k) with Σ j·i_j = n of (Σi)!/(Πi_j!) Π α_j^{i_j}, exactly.
Rational multinomial_coefficient(std::span<const Rational> alphas, int n);

/// 1 / (1 - Σ |α_j x^j|). Throws OutsideDomain when Σ |α_j x^j| ≥ 1.
double abs_majorant_value(std::span<const complex> alphas, complex x);

inline constexpr double kPoleTolerance = 1e-14;

}  // namespace recurconv
