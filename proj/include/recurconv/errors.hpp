#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recurconv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (bad JSON, zero denominator, k mismatch, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// lim α_{l,n} is infinite: the numerator outgrows the denominator.
class DivergentLimit : public Error {
 public:
  using Error::Error;
};

/// Tail bound |α_{l,n}| ≤ (1+ε)|α_l| could not be established.
class CertificationFailed : public Error {
 public:
  CertificationFailed(const std::string& what, std::int64_t first_violation)
      : Error(what), first_violation_(first_violation) {}
  std::int64_t first_violation() const noexcept { return first_violation_; }

 private:
  std::int64_t first_violation_;
};

/// A coefficient was evaluated at an index where its denominator vanishes.
class CoefficientPole : public Error {
 public:
  CoefficientPole(const std::string& what, std::int64_t index) : Error(what), index_(index) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

/// Heun shared denominator vanishes at a nonnegative integer.
class DenominatorPole : public CoefficientPole {
 public:
  using CoefficientPole::CoefficientPole;
};

class PoleAtX : public Error {
 public:
  using Error::Error;
};

class OutsideDomain : public Error {
 public:
  using Error::Error;
};

class RootFindingFailed : public Error {
 public:
  using Error::Error;
};

/// Sequence magnitude left the representable range while a bound was being checked.
class NumericalOverflow : public Error {
 public:
  NumericalOverflow(const std::string& what, std::int64_t index) : Error(what), index_(index) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

class NotAnIndicialRoot : public Error {
 public:
  NotAnIndicialRoot(const std::string& what, std::int64_t index) : Error(what), index_(index) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

class UnsupportedExpansionPoint : public Error {
 public:
  UnsupportedExpansionPoint(const std::string& what, std::int64_t index)
      : Error(what), index_(index) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

}  // namespace recurconv
