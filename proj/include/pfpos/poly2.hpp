#pragma once

#include "pfpos/poly.hpp"

#include <string>
#include <vector>

namespace pfpos {

/// Polynomial in x and mu over the rationals, stored as a polynomial in x
/// whose coefficients are polynomials in mu.
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(std::vector<UniPoly> x_coeffs);
  explicit Poly2(const Rational& c);

  static Poly2 from_x(const UniPoly& p);
  static Poly2 from_mu(const UniPoly& p);
  static Poly2 x() { return from_x(UniPoly::x()); }
  static Poly2 mu() { return from_mu(UniPoly::x()); }

  bool is_zero() const { return c_.empty(); }
  int degree_x() const { return static_cast<int>(c_.size()) - 1; }
  int degree_mu() const;
  bool mu_free() const;
  bool is_constant() const { return c_.size() <= 1 && (c_.empty() || c_[0].is_constant()); }
  Rational constant_value() const;

  /// Coefficient of x^i as a polynomial in mu.
  const UniPoly& x_coeff(int i) const;
  const std::vector<UniPoly>& x_coeffs() const { return c_; }
  /// Requires mu_free().
  UniPoly to_x() const;

  UniPoly eval_mu(const Rational& mu) const;
  UniPoly eval_x(const Rational& x) const;
  Rational eval(const Rational& x, const Rational& mu) const;
  Poly2 derivative_x() const;
  Poly2 shifted_x(const Rational& s) const;
  /// Swaps the roles of x and mu.
  Poly2 transposed() const;

  /// Divides by the positive rational content so that all coefficients are
  /// coprime integers. Signs are preserved.
  Poly2 primitive() const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Rational& s);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }
  friend bool operator<(const Poly2& a, const Poly2& b);

  std::string to_string(const std::string& xvar = "x", const std::string& muvar = "mu") const;

 private:
  void trim();
  std::vector<UniPoly> c_;
};

/// Principal subresultant coefficients psc_0 (the resultant), psc_1, ...,
/// psc_{min(deg p, deg q) - 1} of p and q taken as polynomials in x; each is
/// a polynomial in mu. Both inputs must have positive x-degree.
std::vector<UniPoly> principal_subresultants(const Poly2& p, const Poly2& q);

/// j-th subresultant polynomial of p and q in x (its coefficient of x^j is
/// psc_j). Requires 0 <= j < min(deg p, deg q).
Poly2 subresultant(const Poly2& p, const Poly2& q, int j);

/// Enclosure of p over the box [xl, xh] x [ml, mh].
std::pair<Rational, Rational> interval_eval2(const Poly2& p, const Rational& xl, const Rational& xh,
                                             const Rational& ml, const Rational& mh);

/// Resultant with respect to x, a polynomial in mu.
UniPoly resultant_x(const Poly2& p, const Poly2& q);

/// Determinant over Q[mu] by fraction-free elimination.
UniPoly determinant(std::vector<std::vector<UniPoly>> m);

}  // namespace pfpos
