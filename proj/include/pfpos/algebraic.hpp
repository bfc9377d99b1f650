#pragma once

#include "pfpos/poly.hpp"

#include <compare>
#include <string>
#include <variant>

namespace pfpos {

/// Exact real algebraic number: a root of a square-free primitive integer
/// polynomial, located by a rational isolating interval [lo, hi]. Rational
/// values use a linear defining polynomial and the degenerate interval
/// [q, q]; otherwise lo < hi and the defining polynomial is nonzero at both
/// endpoints with opposite signs.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rational(0)) {}
  RealAlgebraic(const Rational& q);  // NOLINT: implicit on purpose
  /// The unique root of `defining` in [lo, hi]. Throws std::invalid_argument
  /// when the interval does not isolate a simple root.
  RealAlgebraic(UniPoly defining, Rational lo, Rational hi);

  /// Skips validation; the caller guarantees that `defining` is square-free
  /// and primitive with a single simple root in (lo, hi) and nonzero values
  /// at both endpoints.
  static RealAlgebraic unchecked(UniPoly defining, Rational lo, Rational hi) {
    return RealAlgebraic(Trusted{}, std::move(defining), std::move(lo), std::move(hi));
  }

  const UniPoly& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  /// True when the isolating interval is degenerate.
  bool is_rational() const { return lo_ == hi_; }
  const Rational& rational_value() const;

  /// Same number with an isolating interval of width at most width/2 (the
  /// extra halving keeps decimal-looking bounds like [1.41, 1.42] reachable
  /// from dyadic bisection). Rational values hit by bisection collapse to a
  /// degenerate interval.
  RealAlgebraic refined(const Rational& width) const;
  /// One bisection step.
  RealAlgebraic bisected() const;
  RealAlgebraic negated() const;
  double approx() const;
  std::string to_string() const;

 private:
  struct Trusted {};
  RealAlgebraic(Trusted, UniPoly defining, Rational lo, Rational hi)
      : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  UniPoly defining_;
  Rational lo_, hi_;
};

/// Exact sign of p at the point: -1, 0 or +1.
int sign_at(const UniPoly& p, const Rational& point);
int sign_at(const UniPoly& p, const RealAlgebraic& point);

/// Exact comparison; equality is decided with a common-root test.
std::strong_ordering alg_compare(const RealAlgebraic& a, const RealAlgebraic& b);

inline RealAlgebraic refine(const RealAlgebraic& a, const Rational& width) { return a.refined(width); }

/// Rational r with a < r < b. Requires a < b.
Rational rational_between(const RealAlgebraic& a, const RealAlgebraic& b);

/// Interval evaluation of p over [lo, hi]; returns {min bound, max bound}.
std::pair<Rational, Rational> interval_eval(const UniPoly& p, const Rational& lo, const Rational& hi);

}  // namespace pfpos
