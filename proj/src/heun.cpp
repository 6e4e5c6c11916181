#include "recurconv/heun.hpp"

#include <cmath>
#include <string>

#include "recurconv/errors.hpp"
#include "recurconv/frobenius.hpp"

namespace recurconv {

void HeunParams::validate() const {
  if (a == complex{}) throw ValidationError("HeunParams: singularity parameter a must be nonzero");
}

std::pair<complex, complex> indicial_roots(const HeunParams& p) { return {complex{}, 1.0 - p.gamma}; }

bool indicial_roots_coincide(const HeunParams& p) { return p.gamma == complex(1.0); }

RecurrenceSpec heun_recurrence(const HeunParams& p, complex lambda) {
  p.validate();
  const complex a = p.a, al = p.alpha, be = p.beta, ga = p.gamma, de = p.delta, la = lambda;

  // Shared denominator n^2 + (1+γ+2λ)n + (1+λ)(γ+λ) = (n+1+λ)(n+γ+λ).
  const PolynomialInN den{(1.0 + la) * (ga + la), 1.0 + ga + 2.0 * la, 1.0};
  const std::int64_t pole = largest_integer_root(den, 0);
  if (pole >= 0)
    throw DenominatorPole("heun_recurrence: denominator (n+1+λ)(n+γ+λ) vanishes at n = " +
                              std::to_string(pole),
                          pole);

  // A·Ā_n: the 1/(1+a) inside Ā_n cancels against A, which keeps a = -1 finite.
  const complex big_a = (1.0 + a) / a;
  const PolynomialInN num_a{
      (la * (al + be - de + la + a * (ga + de - 1.0 + la)) + p.q) / a,
      (al + be - de + 2.0 * la + a * (ga + de - 1.0 + 2.0 * la)) / a,
      big_a,
  };
  const complex big_b = -1.0 / a;
  const PolynomialInN num_b = big_b * PolynomialInN{(al - 1.0 + la) * (be - 1.0 + la),
                                                    al + be - 2.0 + 2.0 * la, 1.0};
  std::vector<RationalIndexFunction> coeffs;
  coeffs.emplace_back(num_a, den, 0);
  coeffs.emplace_back(num_b, den, 0);
  return RecurrenceSpec{std::move(coeffs)};
}

DomainReport heun_domain(const HeunParams& p) {
  const auto spec = heun_recurrence(p, 0.0);
  const auto limits = spec.limits();
  return domain_report(limits);
}

ODESpec heun_ode(const HeunParams& p) {
  p.validate();
  const complex a = p.a;
  const complex eh = p.epsilon_h();
  // x(x-1)(x-a) = a x - (1+a) x^2 + x^3
  std::vector<complex> a2{0.0, a, -(1.0 + a), 1.0};
  // γ(x-1)(x-a) + δx(x-a) + ε_H x(x-1)
  std::vector<complex> a1{p.gamma * a, -(p.gamma * (1.0 + a) + p.delta * a + eh),
                          p.gamma + p.delta + eh};
  std::vector<complex> a0{-p.q, p.alpha * p.beta};
  return ODESpec{{PolynomialInN{std::move(a0)}, PolynomialInN{std::move(a1)}, PolynomialInN{std::move(a2)}}};
}

}  // namespace recurconv
