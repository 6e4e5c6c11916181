#pragma once

#include <cstdint>
#include <vector>

#include "recurconv/polynomial.hpp"

namespace recurconv {

/// A recurrence coefficient α_{l,n} = numerator(n) / denominator(n), valid for n ≥ n_min.
///
/// Construction checks that the denominator has no zero at an integer n ≥ n_min.
class RationalIndexFunction {
 public:
  RationalIndexFunction(PolynomialInN numerator, PolynomialInN denominator, std::int64_t n_min = 0);

  static RationalIndexFunction constant(complex value, std::int64_t n_min = 0);
  static RationalIndexFunction zero(std::int64_t n_min = 0) { return constant(complex{}, n_min); }

  const PolynomialInN& numerator() const noexcept { return numerator_; }
  const PolynomialInN& denominator() const noexcept { return denominator_; }
  std::int64_t n_min() const noexcept { return n_min_; }
  bool is_zero() const noexcept { return numerator_.is_zero(); }

  /// Evaluates at an integer index; throws CoefficientPole below n_min.
  complex operator()(std::int64_t n) const;
  /// Evaluation at a real abscissa without the domain check.
  complex at(double x) const noexcept { return numerator_(x) / denominator_(x); }

 private:
  PolynomialInN numerator_;
  PolynomialInN denominator_;
  std::int64_t n_min_;
};

/// lim_{n→∞} f(n). Throws DivergentLimit when deg(num) > deg(den).
complex limit_of(const RationalIndexFunction& f);

/// Smallest N such that |f(n)| ≤ bound for every integer n in [N, horizon], where
/// bound = (1+ε)|limit| (or ε when limit = 0), backed by a proof that |f| is
/// monotone on (horizon, ∞). Throws CertificationFailed otherwise.
std::int64_t certify_tail(const RationalIndexFunction& f, complex limit, double epsilon,
                          std::int64_t horizon);

/// The value certify_tail bounds |f(n)| by.
double tail_bound(complex limit, double epsilon) noexcept;

/// Limit vector, tail error bound and tail index shared by every coefficient of a recurrence.
struct LimitProfile {
  std::vector<complex> limits;
  double epsilon = 0.05;
  std::int64_t tail_index = 0;
  /// (1+ε)α_l, or ε for a vanishing limit.
  std::vector<complex> inflated;
  /// Per-coefficient indices returned by certify_tail.
  std::vector<std::int64_t> coefficient_tail_index;

  std::vector<double> inflated_moduli() const;
};

/// Certifies every coefficient and takes the largest tail index, never below min_tail_index.
LimitProfile certify_profile(std::span<const RationalIndexFunction> coefficients, double epsilon,
                             std::int64_t horizon, std::int64_t min_tail_index = 0);

/// Largest integer n ≥ from at which p vanishes, or from - 1 if there is none.
std::int64_t largest_integer_root(const PolynomialInN& p, std::int64_t from);

inline constexpr double kDefaultEpsilon = 0.05;
inline constexpr std::int64_t kDefaultHorizon = 1'000'000;

}  // namespace recurconv
