#include "recurconv/coefficient_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "recurconv/errors.hpp"
#include "recurconv/roots.hpp"

namespace recurconv {
namespace {

constexpr double kIntegerRootTolerance = 1e-10;

bool vanishes_at(const PolynomialInN& p, double n) {
  const double scale = p.magnitude_at(n);
  return std::abs(p(n)) <= kIntegerRootTolerance * scale;
}

// Real roots of the derivative numerator of |f|^2 lying beyond the horizon,
// where a sign change of that numerator means |f| stops being monotone.
bool has_critical_point_beyond(const realpoly::Coeffs& d, double horizon) {
  if (d.size() <= 1) return false;
  const double lead = d.back();
  double cauchy = 0.0;
  for (std::size_t m = 0; m + 1 < d.size(); ++m) cauchy = std::max(cauchy, std::abs(d[m] / lead));
  cauchy += 1.0;
  if (cauchy <= horizon) return false;

  std::vector<complex> as_complex(d.begin(), d.end());
  const PolynomialInN poly{as_complex};
  std::vector<complex> roots;
  try {
    roots = polynomial_roots(poly);
  } catch (const RootFindingFailed&) {
    return true;
  }
  for (const complex r : roots) {
    if (r.real() <= horizon) continue;
    if (std::abs(r.imag()) > 1e-6 * std::abs(r)) continue;
    const double below = std::max(horizon, r.real() * (1.0 - 1e-7));
    const double above = r.real() * (1.0 + 1e-7);
    if (realpoly::sign_at(d, below) != realpoly::sign_at(d, above)) return true;
  }
  // Independent bracketing pass on a geometric grid up to the Cauchy bound.
  int previous = realpoly::sign_at(d, horizon);
  for (double x = horizon; x < cauchy * 2.0; x *= 1.25) {
    const int s = realpoly::sign_at(d, x);
    if (s != 0 && previous != 0 && s != previous) return true;
    if (s != 0) previous = s;
  }
  return false;
}

}  // namespace

RationalIndexFunction::RationalIndexFunction(PolynomialInN numerator, PolynomialInN denominator,
                                             std::int64_t n_min)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)), n_min_(n_min) {
  if (denominator_.is_zero()) throw ValidationError("RationalIndexFunction: zero denominator");
  if (n_min_ < 0) throw ValidationError("RationalIndexFunction: negative n_min");
  for (const auto& c : numerator_.coeffs())
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw ValidationError("RationalIndexFunction: non-finite numerator coefficient");
  for (const auto& c : denominator_.coeffs())
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw ValidationError("RationalIndexFunction: non-finite denominator coefficient");
  const std::int64_t pole = largest_integer_root(denominator_, n_min_);
  if (pole >= n_min_)
    throw CoefficientPole("RationalIndexFunction: denominator vanishes at n = " + std::to_string(pole),
                          pole);
}

RationalIndexFunction RationalIndexFunction::constant(complex value, std::int64_t n_min) {
  return {PolynomialInN::constant(value), PolynomialInN::constant(1.0), n_min};
}

complex RationalIndexFunction::operator()(std::int64_t n) const {
  if (n < n_min_)
    throw CoefficientPole("coefficient evaluated at n = " + std::to_string(n) + " below n_min = " +
                              std::to_string(n_min_),
                          n);
  const double x = static_cast<double>(n);
  return numerator_(x) / denominator_(x);
}

std::int64_t largest_integer_root(const PolynomialInN& p, std::int64_t from) {
  if (p.degree() <= 0) return from - 1;
  std::int64_t best = from - 1;
  for (const complex r : polynomial_roots(p)) {
    if (std::abs(r.imag()) > 1e-6 * std::max(1.0, std::abs(r))) continue;
    const double nearest = std::round(r.real());
    if (nearest < static_cast<double>(from) || nearest > 9e15) continue;
    if (vanishes_at(p, nearest)) best = std::max(best, static_cast<std::int64_t>(nearest));
  }
  return best;
}

complex limit_of(const RationalIndexFunction& f) {
  const int dn = f.numerator().degree();
  const int dd = f.denominator().degree();
  if (dn < dd) return {};
  if (dn == dd) return f.numerator().leading() / f.denominator().leading();
  throw DivergentLimit("limit_of: numerator degree " + std::to_string(dn) +
                       " exceeds denominator degree " + std::to_string(dd));
}

double tail_bound(complex limit, double epsilon) noexcept {
  return limit == complex{} ? epsilon : (1.0 + epsilon) * std::abs(limit);
}

std::int64_t certify_tail(const RationalIndexFunction& f, complex limit, double epsilon,
                          std::int64_t horizon) {
  if (!(epsilon > 0.0)) throw ValidationError("certify_tail: epsilon must be positive");
  if (horizon < f.n_min()) throw ValidationError("certify_tail: horizon below n_min");
  const double bound = tail_bound(limit, epsilon);

  // Scan downward: the first violation found is the largest violating index.
  std::int64_t tail = f.n_min();
  for (std::int64_t n = horizon; n >= f.n_min(); --n) {
    if (!(std::abs(f(n)) <= bound)) {
      tail = n + 1;
      break;
    }
  }
  if (tail > horizon)
    throw CertificationFailed("certify_tail: |f(n)| exceeds the tail bound at the horizon n = " +
                                  std::to_string(horizon),
                              horizon);

  // Beyond the horizon, |f|^2 = U/V with U = |num|^2, V = |den|^2 on the real axis.
  const auto u = realpoly::squared_modulus(f.numerator());
  const auto v = realpoly::squared_modulus(f.denominator());
  const auto critical = realpoly::wronskian_numerator(u, v);
  if (has_critical_point_beyond(critical, static_cast<double>(horizon)))
    throw CertificationFailed(
        "certify_tail: |f| has a turning point beyond the horizon; monotone tail not certified",
        horizon);
  return tail;
}

std::vector<double> LimitProfile::inflated_moduli() const {
  std::vector<double> out;
  out.reserve(inflated.size());
  for (const auto& a : inflated) out.push_back(std::abs(a));
  return out;
}

LimitProfile certify_profile(std::span<const RationalIndexFunction> coefficients, double epsilon,
                             std::int64_t horizon, std::int64_t min_tail_index) {
  LimitProfile profile;
  profile.epsilon = epsilon;
  profile.tail_index = min_tail_index;
  for (const auto& f : coefficients) {
    const complex limit = limit_of(f);
    const std::int64_t n = certify_tail(f, limit, epsilon, horizon);
    profile.limits.push_back(limit);
    profile.inflated.push_back(limit == complex{} ? complex(epsilon) : (1.0 + epsilon) * limit);
    profile.coefficient_tail_index.push_back(n);
    profile.tail_index = std::max({profile.tail_index, n, f.n_min()});
  }
  return profile;
}

}  // namespace recurconv
