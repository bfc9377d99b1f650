#include "pfpos/image.hpp"

#include "pfpos/poly2.hpp"
#include "pfpos/roots.hpp"

#include <stdexcept>

namespace pfpos {

int sign(const RealAlgebraic& a) {
  if (a.is_rational()) return sign(a.rational_value());
  // Isolating intervals of irrational numbers never contain a root at an
  // endpoint, so refining until 0 is outside the interval terminates.
  RealAlgebraic r = a;
  while (r.lo() < 0 && r.hi() > 0) r = r.bisected();
  if (r.is_rational()) return sign(r.rational_value());
  return r.lo() >= 0 ? 1 : -1;
}

RealAlgebraic abs(const RealAlgebraic& a) { return sign(a) < 0 ? a.negated() : a; }

namespace {

std::pair<Rational, Rational> quotient_enclosure(const UniPoly& num, const UniPoly& den, const Rational& lo,
                                                 const Rational& hi) {
  auto [nl, nh] = interval_eval(num, lo, hi);
  auto [dl, dh] = interval_eval(den, lo, hi);
  if (dl <= 0 && dh >= 0) return {Rational(0), Rational(-1)};  // empty marker: refine further
  Rational c[4] = {nl / dl, nl / dh, nh / dl, nh / dh};
  Rational mn = c[0], mx = c[0];
  for (auto& v : c) {
    if (v < mn) mn = v;
    if (v > mx) mx = v;
  }
  return {mn, mx};
}

}  // namespace

RealAlgebraic algebraic_image(const RealAlgebraic& a, const UniPoly& num, const UniPoly& den) {
  if (sign_at(den, a) == 0) throw std::domain_error("algebraic_image: denominator vanishes");
  if (a.is_rational()) return RealAlgebraic(num.eval(a.rational_value()) / den.eval(a.rational_value()));

  // b = num(a)/den(a) is a root of res_y(p(y), den(y) * t - num(y)).
  Poly2 p = Poly2::from_x(a.defining());
  Poly2 q = Poly2::from_x(den) * Poly2::mu() - Poly2::from_x(num);
  UniPoly r = resultant_x(p, q);
  std::vector<RealAlgebraic> cands = isolate_real_roots(squarefree_part(r));

  RealAlgebraic cur = a;
  Rational width = a.hi() - a.lo();
  for (;;) {
    auto [lo, hi] = quotient_enclosure(num, den, cur.lo(), cur.hi());
    if (lo <= hi) {
      std::vector<size_t> hits;
      for (size_t i = 0; i < cands.size(); ++i)
        if (!(cands[i].hi() < lo || cands[i].lo() > hi)) hits.push_back(i);
      if (hits.size() == 1) return cands[hits[0]];
      if (hits.empty()) throw std::logic_error("algebraic_image: no candidate root");
    }
    width /= 4;
    cur = cur.refined(width);
    for (auto& c : cands)
      if (!c.is_rational()) c = c.refined(width);
  }
}

}  // namespace pfpos
