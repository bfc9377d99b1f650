#pragma once

#include "pfpos/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace pfpos {

/// Dense univariate polynomial over the rationals, coefficients in
/// ascending degree order. The zero polynomial has no coefficients and
/// degree -1; otherwise the leading coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly x();
  /// c * x^k
  static UniPoly monomial(const Rational& c, int k);
  /// Product of (x - r) over the given roots.
  static UniPoly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(int i) const;
  const Rational& lc() const;
  Rational constant_term() const { return coeff(0); }

  Rational eval(const Rational& at) const;
  /// p(x + shift)
  UniPoly shifted(const Rational& shift) const;
  /// p(scale * x)
  UniPoly scaled(const Rational& scale) const;
  /// p(-x)
  UniPoly reflected() const { return scaled(Rational(-1)); }
  UniPoly derivative() const;

  /// Positive rational multiple with coprime integer coefficients; the sign
  /// of the leading coefficient is kept.
  UniPoly primitive() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
  /// Total order (degree first, then coefficients from the top); used for
  /// canonical sorting and deduplication.
  friend bool operator<(const UniPoly& a, const UniPoly& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of euclidean division. Throws std::domain_error
/// when dividing by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// a / b, throwing std::domain_error when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), primitive. Throws std::domain_error for p = 0.
UniPoly squarefree_part(const UniPoly& p);

/// Positive rational bound strictly greater than |root| for every complex
/// root (Cauchy). p must be nonzero.
Rational root_bound(const UniPoly& p);

}  // namespace pfpos
