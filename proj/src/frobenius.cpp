#include "recurconv/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "recurconv/errors.hpp"
#include "recurconv/roots.hpp"

namespace recurconv {
namespace {

int lowest_power(const PolynomialInN& p) {
  const auto c = p.coeffs();
  for (std::size_t m = 0; m < c.size(); ++m)
    if (c[m] != complex{}) return static_cast<int>(m);
  return std::numeric_limits<int>::max();
}

// Collected layers: the term a_{i,p} x^p y^{(i)} shifts powers by σ = p - i, and
// the layer polynomial Q_σ(s) = Σ_{p-i=σ} a_{i,p} (s)_i multiplies d_n at x^{n+λ+σ}.
struct Layers {
  int sigma_min = 0;
  int sigma_max = 0;
  std::vector<PolynomialInN> q;  // q[σ - sigma_min]

  const PolynomialInN& at(int sigma) const { return q[static_cast<std::size_t>(sigma - sigma_min)]; }
};

Layers collect_layers(const ODESpec& ode) {
  ode.validate();
  const int j = ode.order();
  Layers layers;
  layers.sigma_min = std::numeric_limits<int>::max();
  layers.sigma_max = std::numeric_limits<int>::min();
  for (int i = 0; i <= j; ++i) {
    const auto& a = ode.coefficients[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    layers.sigma_min = std::min(layers.sigma_min, lowest_power(a) - i);
    layers.sigma_max = std::max(layers.sigma_max, a.degree() - i);
  }
  // Fuchs' criterion: the highest derivative must attain the lowest shift.
  const int leading_shift = lowest_power(ode.coefficients.back()) - j;
  if (leading_shift != layers.sigma_min) {
    for (int i = 0; i < j; ++i) {
      const auto& a = ode.coefficients[static_cast<std::size_t>(i)];
      if (!a.is_zero() && lowest_power(a) - i < leading_shift)
        throw UnsupportedExpansionPoint(
            "x = 0 is an irregular singular point: coefficient of y^(" + std::to_string(i) +
                ") vanishes too slowly relative to the leading coefficient",
            i);
    }
  }
  layers.q.resize(static_cast<std::size_t>(layers.sigma_max - layers.sigma_min + 1));
  for (int i = 0; i <= j; ++i) {
    const auto& a = ode.coefficients[static_cast<std::size_t>(i)];
    const auto ff = PolynomialInN::falling_factorial(i);
    for (int p = 0; p <= a.degree(); ++p) {
      if (a[p] == complex{}) continue;
      layers.q[static_cast<std::size_t>(p - i - layers.sigma_min)] += a[p] * ff;
    }
  }
  return layers;
}

}  // namespace

void ODESpec::validate() const {
  if (coefficients.size() < 2) throw ValidationError("ODESpec: order must be at least 1");
  if (coefficients.back().is_zero()) throw ValidationError("ODESpec: leading coefficient a_j is zero");
  for (const auto& a : coefficients)
    for (const auto& c : a.coeffs())
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw ValidationError("ODESpec: non-finite coefficient");
}

PolynomialInN indicial_polynomial(const ODESpec& ode) {
  const auto layers = collect_layers(ode);
  return layers.at(layers.sigma_min);
}

std::vector<complex> indicial_exponents(const ODESpec& ode) {
  auto roots = polynomial_roots(indicial_polynomial(ode));
  std::sort(roots.begin(), roots.end(), [](complex a, complex b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return roots;
}

RecurrenceSpec derive_recurrence(const ODESpec& ode, complex lambda) {
  const auto layers = collect_layers(ode);
  const auto& indicial = layers.at(layers.sigma_min);
  if (std::abs(indicial(lambda)) > 1e-9 * std::max(1.0, indicial.magnitude_at(std::abs(lambda))))
    throw NotAnIndicialRoot("derive_recurrence: the n = -1 layer does not vanish at this λ", -1);

  // Layer σ_min + l at power x^{λ+n+1+σ_min} multiplies d_{n+1-l}.
  const auto leading = indicial.shifted(1.0 + lambda);
  const std::int64_t pole = largest_integer_root(leading, 0);
  const int k = std::max(1, layers.sigma_max - layers.sigma_min);
  std::vector<RationalIndexFunction> coeffs;
  coeffs.reserve(static_cast<std::size_t>(k));
  for (int l = 1; l <= k; ++l) {
    const std::int64_t first_use = l - 1;
    const int sigma = layers.sigma_min + l;
    PolynomialInN num;
    if (sigma <= layers.sigma_max) num = -1.0 * layers.at(sigma).shifted(1.0 - l + lambda);
    if (num.is_zero()) {
      coeffs.push_back(RationalIndexFunction::zero());
      continue;
    }
    if (pole >= first_use)
      throw UnsupportedExpansionPoint("derive_recurrence: coefficient of d_{n+1} vanishes at n = " +
                                          std::to_string(pole),
                                      pole);
    // Valid from just past the last pole, which lies before the first use.
    coeffs.emplace_back(std::move(num), leading, pole + 1);
  }
  return RecurrenceSpec{std::move(coeffs)};
}

ODEResidual ode_residual(const ODESpec& ode, const SequenceWindow& seq, complex lambda, complex x,
                         std::int64_t terms) {
  if (terms > seq.n_max() + 1) throw ValidationError("ode_residual: not enough sequence terms");
  ODEResidual out;
  CompensatedSum total;
  for (int i = 0; i <= ode.order(); ++i) {
    const auto& a = ode.coefficients[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    const auto ff = PolynomialInN::falling_factorial(i);
    CompensatedSum derivative;
    double magnitude = 0.0;
    for (std::int64_t n = 0; n < terms; ++n) {
      const complex s = static_cast<double>(n) + lambda;
      const complex factor = ff(s);
      if (factor == complex{}) continue;
      const complex term = seq.values[static_cast<std::size_t>(n)] * factor * std::pow(x, s - static_cast<double>(i));
      derivative.add(term);
      magnitude += std::abs(term);
    }
    const complex ax = a(x);
    total.add(ax * derivative.value());
    out.scale += std::abs(ax) * magnitude;
  }
  out.residual = total.value();
  return out;
}

}  // namespace recurconv
