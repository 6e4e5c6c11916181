#include "recurconv/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace recurconv {

PolynomialInN::PolynomialInN(std::vector<complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolynomialInN::PolynomialInN(std::initializer_list<complex> coeffs) : coeffs_(coeffs) { trim(); }

PolynomialInN PolynomialInN::constant(complex c) { return PolynomialInN{std::vector<complex>{c}}; }

PolynomialInN PolynomialInN::falling_factorial(int order) {
  PolynomialInN result = constant(1.0);
  for (int t = 0; t < order; ++t) result = result * PolynomialInN{complex(-t), complex(1.0)};
  return result;
}

void PolynomialInN::trim() {
  while (!coeffs_.empty() && coeffs_.back() == complex{}) coeffs_.pop_back();
}

complex PolynomialInN::operator[](int m) const noexcept {
  if (m < 0 || m > degree()) return {};
  return coeffs_[static_cast<std::size_t>(m)];
}

complex PolynomialInN::operator()(complex n) const noexcept {
  complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

double PolynomialInN::magnitude_at(double n) const noexcept {
  double acc = 0.0;
  const double an = std::abs(n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * an + std::abs(*it);
  return acc;
}

PolynomialInN PolynomialInN::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<complex> d(coeffs_.size() - 1);
  for (std::size_t m = 1; m < coeffs_.size(); ++m) d[m - 1] = coeffs_[m] * static_cast<double>(m);
  return PolynomialInN{std::move(d)};
}

PolynomialInN PolynomialInN::shifted(complex shift) const {
  // Horner in polynomial arithmetic: p(s + c) = (...(a_d (s+c) + a_{d-1})(s+c) + ...)
  PolynomialInN result;
  const PolynomialInN linear{shift, complex(1.0)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result = result * linear;
    result += constant(*it);
  }
  return result;
}

PolynomialInN& PolynomialInN::operator+=(const PolynomialInN& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t m = 0; m < rhs.coeffs_.size(); ++m) coeffs_[m] += rhs.coeffs_[m];
  trim();
  return *this;
}

PolynomialInN& PolynomialInN::operator-=(const PolynomialInN& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t m = 0; m < rhs.coeffs_.size(); ++m) coeffs_[m] -= rhs.coeffs_[m];
  trim();
  return *this;
}

PolynomialInN& PolynomialInN::operator*=(complex scale) {
  for (auto& c : coeffs_) c *= scale;
  trim();
  return *this;
}

PolynomialInN operator*(const PolynomialInN& lhs, const PolynomialInN& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<complex> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return PolynomialInN{std::move(out)};
}

namespace realpoly {

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0.0) p.pop_back();
}

Coeffs squared_modulus(const PolynomialInN& p) {
  const auto c = p.coeffs();
  if (c.empty()) return {};
  Coeffs out(2 * c.size() - 1, 0.0);
  // coefficient of x^m is Σ_{i+j=m} p_i conj(p_j); the imaginary parts cancel pairwise.
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out[i + j] += (c[i] * std::conj(c[j])).real();
  trim(out);
  return out;
}

Coeffs derivative(const Coeffs& p) {
  if (p.size() <= 1) return {};
  Coeffs d(p.size() - 1);
  for (std::size_t m = 1; m < p.size(); ++m) d[m - 1] = p[m] * static_cast<double>(m);
  return d;
}

Coeffs wronskian_numerator(const Coeffs& a, const Coeffs& b) {
  const Coeffs da = derivative(a);
  const Coeffs db = derivative(b);
  std::size_t size = 0;
  if (!da.empty() && !b.empty()) size = std::max(size, da.size() + b.size() - 1);
  if (!a.empty() && !db.empty()) size = std::max(size, a.size() + db.size() - 1);
  Coeffs value(size, 0.0);
  Coeffs scale(size, 0.0);
  for (std::size_t i = 0; i < da.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      value[i + j] += da[i] * b[j];
      scale[i + j] += std::abs(da[i] * b[j]);
    }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < db.size(); ++j) {
      value[i + j] -= a[i] * db[j];
      scale[i + j] += std::abs(a[i] * db[j]);
    }
  constexpr double noise = 1e-12;
  for (std::size_t m = 0; m < size; ++m)
    if (std::abs(value[m]) <= noise * scale[m]) value[m] = 0.0;
  trim(value);
  return value;
}

int sign_at(const Coeffs& p, double x) {
  if (p.empty()) return 0;
  // x^{-d} p(x) = Σ p_m y^{d-m} with y = 1/x; Horner over ascending m.
  const double y = 1.0 / x;
  double acc = 0.0;
  for (const double c : p) acc = acc * y + c;
  return (acc > 0.0) - (acc < 0.0);
}

}  // namespace realpoly

}  // namespace recurconv
