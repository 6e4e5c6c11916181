#pragma once

#include <utility>

#include "recurconv/convergence_domain.hpp"
#include "recurconv/recurrence.hpp"

namespace recurconv {

struct ODESpec;

/// Parameters of Heun's equation
///   y'' + (γ/x + δ/(x-1) + ε_H/(x-a)) y' + (αβx - q)/(x(x-1)(x-a)) y = 0.
/// ε_H is derived from the Fuchs relation and cannot be set independently.
struct HeunParams {
  complex a{2.0};
  complex alpha{1.0};
  complex beta{1.0};
  complex gamma{1.0};
  complex delta{1.0};
  complex q{0.0};

  complex epsilon_h() const noexcept { return alpha + beta - gamma - delta + 1.0; }
  /// Throws ValidationError when a = 0.
  void validate() const;
};

/// (0, 1 - γ)
std::pair<complex, complex> indicial_roots(const HeunParams& p);

bool indicial_roots_coincide(const HeunParams& p);

/// The 3-term relation d_{n+1} = A·Ā_n d_n + B·B̄_n d_{n-1} with A = (1+a)/a, B = -1/a.
/// Throws DenominatorPole if (n+1+λ)(n+γ+λ) vanishes at an integer n ≥ 0.
RecurrenceSpec heun_recurrence(const HeunParams& p, complex lambda);

DomainReport heun_domain(const HeunParams& p);

/// x(x-1)(x-a) y'' + [γ(x-1)(x-a) + δx(x-a) + ε_H x(x-1)] y' + (αβx - q) y = 0
ODESpec heun_ode(const HeunParams& p);

}  // namespace recurconv
