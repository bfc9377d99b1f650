#include "pfpos/ratfunc.hpp"

#include <stdexcept>

namespace pfpos {

RatFunc::RatFunc(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num.is_zero()) {
    den_ = UniPoly::constant(1);
    return;
  }
  UniPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  Rational l = den.lc();
  num_ = num * Rational(1 / l);
  den_ = den * Rational(1 / l);
}

RatFunc RatFunc::from_coprime(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num.is_zero()) return RatFunc();
  Rational l = den.lc();
  return RatFunc(num * Rational(1 / l), den * Rational(1 / l), Reduced{});
}

RatFunc RatFunc::shifted(const Rational& s) const {
  return RatFunc(num_.shifted(s), den_.shifted(s), Reduced{});
}

Rational RatFunc::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (d == 0) throw std::domain_error("RatFunc: evaluation at a pole");
  return num_.eval(at) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace pfpos
