#include "recurconv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "recurconv/errors.hpp"

namespace recurconv {
namespace {

struct ValueAndSlope {
  complex value;
  complex slope;
};

ValueAndSlope horner_with_derivative(std::span<const complex> c, complex z) {
  complex p{};
  complex dp{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

void newton_polish(const PolynomialInN& p, complex& z, const RootFinderOptions& options) {
  double best = relative_residual(p, z);
  for (int step = 0; step < 20 && best > options.polish_target * 1e-3; ++step) {
    const auto [value, slope] = horner_with_derivative(p.coeffs(), z);
    if (slope == complex{}) break;
    const complex candidate = z - value / slope;
    const double residual = relative_residual(p, candidate);
    if (!(residual < best)) break;
    z = candidate;
    best = residual;
  }
}

}  // namespace

double relative_residual(const PolynomialInN& p, complex z) {
  const double scale = p.magnitude_at(std::abs(z));
  if (scale == 0.0) return 0.0;
  return std::abs(p(z)) / scale;
}

std::vector<complex> polynomial_roots(const PolynomialInN& p, const RootFinderOptions& options) {
  if (p.is_zero()) throw ValidationError("polynomial_roots: zero polynomial has no finite root set");

  std::vector<complex> roots;
  auto coeffs = std::vector<complex>(p.coeffs().begin(), p.coeffs().end());
  // Exact zero roots first; they would otherwise stall the iteration at the origin.
  std::size_t zeros = 0;
  while (zeros < coeffs.size() && coeffs[zeros] == complex{}) ++zeros;
  roots.assign(zeros, complex{});
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));
  const PolynomialInN reduced{coeffs};
  const int degree = reduced.degree();

  if (degree == 1) {
    roots.push_back(-coeffs[0] / coeffs[1]);
  } else if (degree > 1) {
    const double radius = std::pow(std::abs(coeffs.front() / coeffs.back()), 1.0 / degree);
    std::vector<complex> z(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) {
      const double theta = 2.0 * std::numbers::pi * i / degree + 0.4;
      z[static_cast<std::size_t>(i)] = std::polar(radius, theta);
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < options.max_iterations; ++iter) {
      bool converged = true;
      for (std::size_t i = 0; i < z.size(); ++i) {
        const auto [value, slope] = horner_with_derivative(coeffs, z[i]);
        if (value == complex{}) continue;
        complex repulsion{};
        for (std::size_t j = 0; j < z.size(); ++j)
          if (j != i) repulsion += 1.0 / (z[i] - z[j]);
        complex step;
        if (slope == complex{}) {
          step = complex(radius * 1e-3 + eps, radius * 1e-3);
        } else {
          const complex ratio = value / slope;
          step = ratio / (1.0 - ratio * repulsion);
        }
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
        z[i] -= step;
        if (std::abs(step) > 4.0 * eps * std::abs(z[i])) converged = false;
      }
      if (converged) break;
    }
    for (auto& root : z) newton_polish(reduced, root, options);
    roots.insert(roots.end(), z.begin(), z.end());
  }

  for (const auto& root : roots) {
    const double residual = relative_residual(p, root);
    if (!(residual <= options.accept_residual))
      throw RootFindingFailed("polynomial_roots: residual " + std::to_string(residual) +
                              " exceeds acceptance threshold");
  }
  std::sort(roots.begin(), roots.end(), [](complex a, complex b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  return roots;
}

}  // namespace recurconv
