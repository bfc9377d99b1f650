#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pfpos {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// n/d in canonical form (mpq_class(n, d) alone does not reduce).
inline Rational make_rational(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Parses "a", "-a" or "a/b" (surrounding whitespace allowed). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

Rational pow(const Rational& base, long exponent);

/// Simplest rational (smallest denominator, then smallest |numerator|)
/// strictly between lo and hi. Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace pfpos
