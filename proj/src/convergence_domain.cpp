#include "recurconv/convergence_domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "recurconv/roots.hpp"

namespace recurconv {
namespace {

double modulus_sum(std::span<const double> moduli, double r) {
  double acc = 0.0;
  for (auto it = moduli.rbegin(); it != moduli.rend(); ++it) acc = (acc + *it) * r;
  return acc;
}

constexpr double kEqualModulusTolerance = 1e-9;

}  // namespace

Membership contains(std::span<const complex> alphas, complex x) {
  const double r = std::abs(x);
  double sum = 0.0;
  double power = 1.0;
  for (const complex a : alphas) {
    power *= r;
    sum += std::abs(a) * power;
  }
  const double margin = 1.0 - sum;
  return {margin > 0.0, margin};
}

double abs_radius(std::span<const complex> alphas) {
  std::vector<double> moduli;
  moduli.reserve(alphas.size());
  for (const complex a : alphas) moduli.push_back(std::abs(a));

  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < moduli.size(); ++m)
    if (moduli[m] > 0.0) hi = std::min(hi, std::pow(1.0 / moduli[m], 1.0 / static_cast<double>(m + 1)));
  if (std::isinf(hi)) return hi;
  // A single term already reaches 1 at hi; expand only if rounding left us just short.
  while (modulus_sum(moduli, hi) < 1.0) hi *= 2.0;

  double lo = 0.0;
  if (modulus_sum(moduli, hi) == 1.0) return hi;
  // Full-precision bisection; stops when the midpoint no longer splits the bracket.
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = modulus_sum(moduli, mid);
    if (f == 1.0) return mid;
    (f < 1.0 ? lo : hi) = mid;
  }
  return std::abs(modulus_sum(moduli, lo) - 1.0) <= std::abs(modulus_sum(moduli, hi) - 1.0) ? lo : hi;
}

PolynomialInN characteristic_polynomial(std::span<const complex> alphas) {
  std::vector<complex> c;
  c.reserve(alphas.size() + 1);
  c.push_back(1.0);
  for (const complex a : alphas) c.push_back(-a);
  return PolynomialInN{std::move(c)};
}

PerronResult pp_radius(std::span<const complex> alphas) {
  const auto p = characteristic_polynomial(alphas);
  PerronResult result;
  if (p.degree() < 1) {
    result.radius = std::numeric_limits<double>::infinity();
    return result;
  }
  result.roots = polynomial_roots(p);
  result.radius = std::abs(result.roots.front());
  return result;
}

DomainReport domain_report(std::span<const complex> limits) {
  DomainReport report;
  report.limits.assign(limits.begin(), limits.end());
  report.abs_radius = abs_radius(limits);
  auto pp = pp_radius(limits);
  report.pp_radius = pp.radius;
  report.characteristic_roots = std::move(pp.roots);
  const auto& roots = report.characteristic_roots;
  if (roots.size() >= 2) {
    const double smallest = std::abs(roots.front());
    for (std::size_t i = 1; i < roots.size(); ++i) {
      if (std::abs(std::abs(roots[i]) - smallest) > kEqualModulusTolerance * std::max(1.0, smallest)) break;
      if (std::abs(roots[i] - roots.front()) > kEqualModulusTolerance * std::max(1.0, smallest)) {
        report.smallest_roots_equal_modulus = true;
        break;
      }
    }
  }
  return report;
}

std::vector<BoundarySample> boundary_circle(const DomainReport& report, int samples) {
  std::vector<BoundarySample> out;
  if (!std::isfinite(report.abs_radius) || samples <= 0) return out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / samples;
    out.push_back({theta, std::polar(report.abs_radius, theta)});
  }
  return out;
}

}  // namespace recurconv
