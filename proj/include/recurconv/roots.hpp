#pragma once

#include <span>
#include <vector>

#include "recurconv/polynomial.hpp"

namespace recurconv {

struct RootFinderOptions {
  int max_iterations = 500;
  /// Newton-polish target for |p(z)| / Σ|c_j||z|^j.
  double polish_target = 1e-12;
  /// Any root whose relative residual exceeds this raises RootFindingFailed.
  double accept_residual = 1e-8;
};

/// All complex roots of a polynomial (ascending coefficients), by simultaneous
/// Aberth-Ehrlich iteration followed by Newton polishing. Sorted by modulus,
/// ties broken by argument.
std::vector<complex> polynomial_roots(const PolynomialInN& p, const RootFinderOptions& options = {});

/// Backward error of z as a root: |p(z)| / Σ|c_j||z|^j.
double relative_residual(const PolynomialInN& p, complex z);

}  // namespace recurconv
