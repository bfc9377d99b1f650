#include "pfpos/rational.hpp"

#include <optional>
#include <stdexcept>

namespace pfpos {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

// Simplest rational in the open interval (lo, hi) for lo >= 0; hi absent means +inf.
Rational simplest_nonneg(const Rational& lo, const std::optional<Rational>& hi) {
  Integer fl = floor(lo);
  Integer next = fl + 1;
  if (!hi || Rational(next) < *hi) return Rational(next);
  Rational inv_hi = 1 / (*hi - fl);
  if (lo == Rational(fl)) return Rational(fl) + 1 / simplest_nonneg(inv_hi, std::nullopt);
  return Rational(fl) + 1 / simplest_nonneg(inv_hi, Rational(1 / (lo - fl)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return Rational(to_integer(s));
  }
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer d = to_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(to_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1 / base), -exponent);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return 0;
  if (hi <= 0) return -simplest_nonneg(-hi, Rational(-lo));
  return simplest_nonneg(lo, hi);
}

}  // namespace pfpos
