#pragma once

#include <span>
#include <vector>

#include "recurconv/polynomial.hpp"

namespace recurconv {

struct Membership {
  bool inside = false;
  /// 1 - Σ |α_m| |x|^m
  double margin = 0.0;
};

/// Membership of x in D = { x : Σ |α_m x^m| < 1 }.
Membership contains(std::span<const complex> alphas, complex x);

/// Radius r* of the disk D, the positive solution of Σ |α_m| r^m = 1, by bisection.
/// +infinity when every α_m vanishes.
double abs_radius(std::span<const complex> alphas);

struct PerronResult {
  /// Smallest root modulus of 1 - Σ α_j x^j (+infinity when there is no root).
  double radius = 0.0;
  /// All roots, sorted by modulus.
  std::vector<complex> roots;
};

/// Poincaré–Perron comparison radius. Reported alongside abs_radius, never used as a convergence claim.
PerronResult pp_radius(std::span<const complex> alphas);

/// 1 - Σ_{j=1..k} α_j x^j as a polynomial in x.
PolynomialInN characteristic_polynomial(std::span<const complex> alphas);

struct DomainReport {
  std::vector<complex> limits;
  double abs_radius = 0.0;
  double pp_radius = 0.0;
  std::vector<complex> characteristic_roots;
  /// At least two distinct roots share the smallest modulus.
  bool smallest_roots_equal_modulus = false;

  double margin_at(complex x) const { return contains(limits, x).margin; }
};

DomainReport domain_report(std::span<const complex> limits);

struct BoundarySample {
  double theta;
  complex point;
};

/// Points on |x| = abs_radius for plotting; empty when the radius is infinite.
std::vector<BoundarySample> boundary_circle(const DomainReport& report, int samples);

}  // namespace recurconv
