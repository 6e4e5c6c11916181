#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace recurconv {

using complex = std::complex<double>;

/// Polynomial with complex coefficients, ascending degree: coeffs()[m] multiplies n^m.
///
/// Stored trimmed: the highest stored coefficient is nonzero, and the zero
/// polynomial has no coefficients at all (degree() == -1).
class PolynomialInN {
 public:
  PolynomialInN() = default;
  explicit PolynomialInN(std::vector<complex> coeffs);
  PolynomialInN(std::initializer_list<complex> coeffs);

  static PolynomialInN constant(complex c);
  /// Π_{t=0}^{order-1} (s - t)
  static PolynomialInN falling_factorial(int order);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const complex> coeffs() const noexcept { return coeffs_; }
  complex leading() const noexcept { return coeffs_.empty() ? complex{} : coeffs_.back(); }
  complex operator[](int m) const noexcept;

  complex operator()(complex n) const noexcept;
  complex operator()(double n) const noexcept { return (*this)(complex{n, 0.0}); }

  /// Σ |c_m| |n|^m, the natural magnitude against which a value at n is judged.
  double magnitude_at(double n) const noexcept;

  PolynomialInN derivative() const;
  /// p(s + shift) as a polynomial in s.
  PolynomialInN shifted(complex shift) const;

  PolynomialInN& operator+=(const PolynomialInN& rhs);
  PolynomialInN& operator-=(const PolynomialInN& rhs);
  PolynomialInN& operator*=(complex scale);

  friend PolynomialInN operator+(PolynomialInN lhs, const PolynomialInN& rhs) { return lhs += rhs; }
  friend PolynomialInN operator-(PolynomialInN lhs, const PolynomialInN& rhs) { return lhs -= rhs; }
  friend PolynomialInN operator*(PolynomialInN lhs, complex s) { return lhs *= s; }
  friend PolynomialInN operator*(complex s, PolynomialInN rhs) { return rhs *= s; }
  friend PolynomialInN operator*(const PolynomialInN& lhs, const PolynomialInN& rhs);
  friend bool operator==(const PolynomialInN&, const PolynomialInN&) = default;

 private:
  void trim();
  std::vector<complex> coeffs_;
};

/// Real polynomials (ascending) used by the monotonicity certificate.
namespace realpoly {

using Coeffs = std::vector<double>;

/// |p(x)|^2 for real x, as a real polynomial.
Coeffs squared_modulus(const PolynomialInN& p);
Coeffs derivative(const Coeffs& p);
/// a'b - ab' with coefficients whose magnitude is at rounding-noise level
/// relative to the terms that produced them set to exactly zero.
Coeffs wronskian_numerator(const Coeffs& a, const Coeffs& b);
void trim(Coeffs& p);
/// Sign of p(x) for x > 0, evaluated as x^{-deg} p(x) so large x cannot overflow.
int sign_at(const Coeffs& p, double x);

}  // namespace realpoly

}  // namespace recurconv
