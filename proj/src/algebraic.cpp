#include "pfpos/algebraic.hpp"

#include "pfpos/roots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pfpos {

namespace {

UniPoly linear_for(const Rational& q) {
  // den*x - num
  return UniPoly({Rational(-q.get_num()), Rational(q.get_den())});
}

std::pair<Rational, Rational> interval_mul(const Rational& a, const Rational& b, const Rational& c,
                                           const Rational& d) {
  Rational p1 = a * c, p2 = a * d, p3 = b * c, p4 = b * d;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

}  // namespace

std::pair<Rational, Rational> interval_eval(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return {Rational(0), Rational(0)};
  const auto& c = p.coeffs();
  Rational a = c.back(), b = c.back();
  for (int i = p.degree() - 1; i >= 0; --i) {
    auto [m, M] = interval_mul(a, b, lo, hi);
    a = m + c[static_cast<size_t>(i)];
    b = M + c[static_cast<size_t>(i)];
  }
  return {a, b};
}

RealAlgebraic::RealAlgebraic(const Rational& q) : defining_(linear_for(q)), lo_(q), hi_(q) {}

RealAlgebraic::RealAlgebraic(UniPoly defining, Rational lo, Rational hi) {
  if (defining.is_zero()) throw std::invalid_argument("RealAlgebraic: zero defining polynomial");
  UniPoly p = squarefree_part(defining);
  if (lo > hi) throw std::invalid_argument("RealAlgebraic: lo > hi");
  if (lo == hi) {
    if (p.eval(lo) != 0) throw std::invalid_argument("RealAlgebraic: degenerate interval is not a root");
    *this = RealAlgebraic(lo);
    return;
  }
  int sl = sign(p.eval(lo)), sh = sign(p.eval(hi));
  if (sl == 0 && sh == 0) throw std::invalid_argument("RealAlgebraic: both endpoints are roots");
  if (sl == 0 || sh == 0) {
    // An endpoint root is only acceptable when it is the single root of the interval.
    SturmChain sc(p);
    if (sc.count(lo, hi) + (sl == 0 ? 1 : 0) != 1) throw std::invalid_argument("RealAlgebraic: interval not isolating");
    *this = RealAlgebraic(sl == 0 ? lo : hi);
    return;
  }
  if (sl == sh || SturmChain(p).count(lo, hi) != 1)
    throw std::invalid_argument("RealAlgebraic: interval does not isolate a single root");
  defining_ = std::move(p);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
}

const Rational& RealAlgebraic::rational_value() const {
  if (!is_rational()) throw std::logic_error("RealAlgebraic: value is not known to be rational");
  return lo_;
}

RealAlgebraic RealAlgebraic::bisected() const {
  if (is_rational()) return *this;
  Rational mid = (lo_ + hi_) / 2;
  int sm = sign(defining_.eval(mid));
  if (sm == 0) return RealAlgebraic(mid);
  int sl = sign(defining_.eval(lo_));
  if (sm == sl) return RealAlgebraic(Trusted{}, defining_, mid, hi_);
  return RealAlgebraic(Trusted{}, defining_, lo_, mid);
}

RealAlgebraic RealAlgebraic::refined(const Rational& width) const {
  if (width <= 0) throw std::invalid_argument("refine: width must be positive");
  Rational target = width / 2;
  if (is_rational() || hi_ - lo_ <= target) return *this;
  // Bisection with the endpoint sign carried along to avoid re-evaluating.
  UniPoly p = defining_;
  Rational lo = lo_, hi = hi_;
  int sl = sign(p.eval(lo));
  while (hi - lo > target) {
    Rational mid = (lo + hi) / 2;
    int sm = sign(p.eval(mid));
    if (sm == 0) return RealAlgebraic(mid);
    if (sm == sl) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return RealAlgebraic(Trusted{}, std::move(p), std::move(lo), std::move(hi));
}

RealAlgebraic RealAlgebraic::negated() const {
  if (is_rational()) return RealAlgebraic(Rational(-lo_));
  UniPoly p = defining_.reflected();
  if (p.lc() < 0) p = -p;
  return RealAlgebraic(Trusted{}, std::move(p), Rational(-hi_), Rational(-lo_));
}

double RealAlgebraic::approx() const {
  RealAlgebraic r = refined(Rational(1, 1 << 30));
  Rational mid = (r.lo_ + r.hi_) / 2;
  return mid.get_d();
}

std::string RealAlgebraic::to_string() const {
  if (is_rational()) return lo_.get_str();
  std::ostringstream out;
  out << "root(" << defining_.to_string() << ", [" << lo_.get_str() << ", " << hi_.get_str() << "])";
  return out.str();
}

int sign_at(const UniPoly& p, const Rational& point) { return sign(p.eval(point)); }

int sign_at(const UniPoly& p, const RealAlgebraic& point) {
  if (p.is_zero()) return 0;
  if (point.is_rational()) return sign_at(p, point.rational_value());
  if (p.is_constant()) return sign(p.lc());
  // Common-root test: the gcd divides the square-free defining polynomial,
  // so it has at most one root in the isolating interval.
  UniPoly g = gcd(p, point.defining());
  if (g.degree() > 0 && sign(g.eval(point.lo())) * sign(g.eval(point.hi())) < 0) return 0;
  RealAlgebraic a = point;
  Rational width = (a.hi() - a.lo());
  for (;;) {
    auto [m, M] = interval_eval(p, a.lo(), a.hi());
    if (m > 0) return 1;
    if (M < 0) return -1;
    width /= 4;
    a = a.refined(width);
    if (a.is_rational()) return sign_at(p, a.rational_value());
  }
}

std::strong_ordering alg_compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.rational_value(), b.rational_value()) <=> 0;
  if (b.is_rational()) {
    // sign(a - q) = sign of (x - q) at a
    int s = sign_at(UniPoly({Rational(-b.rational_value()), Rational(1)}), a);
    return s <=> 0;
  }
  if (a.is_rational()) {
    auto r = alg_compare(b, a);
    if (r < 0) return std::strong_ordering::greater;
    if (r > 0) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }
  if (a.hi() < b.lo()) return std::strong_ordering::less;
  if (b.hi() < a.lo()) return std::strong_ordering::greater;
  UniPoly g = gcd(a.defining(), b.defining());
  if (g.degree() > 0 && sign_at(g, a) == 0 && sign_at(g, b) == 0) {
    // g has a single root inside a's interval, so a == b iff b lies strictly inside it.
    if (alg_compare(b, RealAlgebraic(a.lo())) > 0 && alg_compare(b, RealAlgebraic(a.hi())) < 0)
      return std::strong_ordering::equal;
  }
  RealAlgebraic x = a, y = b;
  for (;;) {
    if (x.hi() < y.lo()) return std::strong_ordering::less;
    if (y.hi() < x.lo()) return std::strong_ordering::greater;
    if (x.is_rational() || y.is_rational()) return alg_compare(x, y);
    if (x.hi() - x.lo() >= y.hi() - y.lo()) {
      x = x.bisected();
    } else {
      y = y.bisected();
    }
  }
}

Rational rational_between(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (alg_compare(a, b) >= 0) throw std::invalid_argument("rational_between: a >= b");
  RealAlgebraic x = a, y = b;
  for (;;) {
    const Rational& upper_a = x.hi();
    const Rational& lower_b = y.lo();
    if (upper_a < lower_b) return simplest_between(upper_a, lower_b);
    if (x.hi() - x.lo() >= y.hi() - y.lo()) {
      x = x.bisected();
    } else {
      y = y.bisected();
    }
  }
}

}  // namespace pfpos
