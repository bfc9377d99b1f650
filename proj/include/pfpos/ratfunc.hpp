#pragma once

#include "pfpos/poly.hpp"

#include <string>

namespace pfpos {

/// Reduced quotient of univariate polynomials; the denominator is monic and
/// coprime to the numerator.
class RatFunc {
 public:
  RatFunc() : den_(UniPoly::constant(1)) {}
  RatFunc(UniPoly p) : num_(std::move(p)), den_(UniPoly::constant(1)) {}  // NOLINT
  RatFunc(UniPoly num, UniPoly den);
  /// Skips the gcd; the caller guarantees num and den are coprime.
  static RatFunc from_coprime(UniPoly num, UniPoly den);

  const UniPoly& numer() const { return num_; }
  const UniPoly& denom() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// r(x + s)
  RatFunc shifted(const Rational& s) const;
  Rational eval(const Rational& at) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  struct Reduced {};
  RatFunc(UniPoly num, UniPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  UniPoly num_, den_;
};

}  // namespace pfpos
