#include "pfpos/roots.hpp"

#include <stdexcept>

namespace pfpos {

bool Domain::contains(const Rational& q) const {
  if (lo && (lo_open ? q <= *lo : q < *lo)) return false;
  if (hi && (hi_open ? q >= *hi : q > *hi)) return false;
  return true;
}

bool Domain::contains(const RealAlgebraic& a) const {
  if (a.is_rational()) return contains(a.rational_value());
  if (lo) {
    auto c = alg_compare(a, RealAlgebraic(*lo));
    if (c < 0 || (lo_open && c == 0)) return false;
  }
  if (hi) {
    auto c = alg_compare(a, RealAlgebraic(*hi));
    if (c > 0 || (hi_open && c == 0)) return false;
  }
  return true;
}

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  chain_.push_back(p.primitive());
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative().primitive());
  while (chain_.back().degree() > 0) {
    UniPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back((-r).primitive());
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& q : chain_) {
    int s = sign(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::variations_at_infinity(bool positive) const {
  int changes = 0, last = 0;
  for (const auto& q : chain_) {
    int s = sign(q.lc());
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count(const std::optional<Rational>& a, const std::optional<Rational>& b) const {
  int va = a ? variations_at(*a) : variations_at_infinity(false);
  int vb = b ? variations_at(*b) : variations_at_infinity(true);
  return va - vb;
}

namespace {

struct Isolator {
  const UniPoly& p;
  SturmChain sturm;
  std::vector<RealAlgebraic> out;

  // Roots in (a, b], ascending.
  void run(const Rational& a, const Rational& b, int n) {
    if (n == 0) return;
    if (n == 1) {
      emit(a, b);
      return;
    }
    Rational mid = (a + b) / 2;
    int left = sturm.count(a, mid);
    run(a, mid, left);
    run(mid, b, n - left);
  }

  void emit(Rational a, Rational b) {
    if (p.eval(b) == 0) {
      out.emplace_back(b);
      return;
    }
    // Move the left end off a root (which belongs to the neighbouring cell).
    while (p.eval(a) == 0) {
      Rational mid = (a + b) / 2;
      if (sturm.count(a, mid) == 1) {
        if (p.eval(mid) == 0) {
          out.emplace_back(mid);
          return;
        }
        b = mid;
      } else {
        a = mid;
      }
    }
    out.push_back(RealAlgebraic::unchecked(p, a, b));
  }
};

}  // namespace

namespace {

// A rational root k/m of a primitive integer polynomial has m | lc, so once
// the interval is narrower than 1/|lc| at most two multiples of 1/|lc| fall
// inside it.
RealAlgebraic detect_rational_root(const RealAlgebraic& root) {
  if (root.is_rational()) return root;
  const UniPoly& p = root.defining();
  Integer lc = abs(p.lc().get_num());
  RealAlgebraic r = root.refined(make_rational(1, lc));
  if (r.is_rational()) return r;
  Rational lcq(lc);
  Integer k0 = ceil(r.lo() * lcq), k1 = floor(r.hi() * lcq);
  for (Integer k = k0; k <= k1; ++k) {
    Rational cand = make_rational(k, lc);
    if (p.eval(cand) == 0) return RealAlgebraic(cand);
  }
  return root;
}

// Shrinks neighbouring intervals until the closed intervals are disjoint.
void separate(std::vector<RealAlgebraic>& roots) {
  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    while (!(roots[i].hi() < roots[i + 1].lo())) {
      RealAlgebraic& a = roots[i];
      RealAlgebraic& b = roots[i + 1];
      if (a.hi() - a.lo() >= b.hi() - b.lo()) {
        a = a.bisected();
      } else {
        b = b.bisected();
      }
    }
  }
}

}  // namespace

std::vector<RealAlgebraic> isolate_real_roots(const UniPoly& poly, const Domain& domain, bool detect_rational) {
  if (poly.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  if (poly.degree() == 0) return {};
  UniPoly p = squarefree_part(poly);
  Rational bound = root_bound(p);
  Rational a = domain.lo ? *domain.lo : -bound;
  Rational b = domain.hi ? *domain.hi : bound;
  std::vector<RealAlgebraic> roots;
  if (domain.lo && !domain.lo_open && p.eval(*domain.lo) == 0) roots.emplace_back(*domain.lo);
  if (a < b) {
    Isolator iso{p, SturmChain(p), {}};
    iso.run(a, b, iso.sturm.count(a, b));
    for (auto& r : iso.out) {
      if (domain.hi && domain.hi_open && r.is_rational() && r.rational_value() == *domain.hi) continue;
      roots.push_back(detect_rational ? detect_rational_root(r) : std::move(r));
    }
  }
  separate(roots);
  return roots;
}

int count_real_roots(const UniPoly& poly, const Domain& domain) {
  if (poly.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
  if (poly.degree() == 0) return 0;
  UniPoly p = squarefree_part(poly);
  SturmChain sc(p);
  int n = sc.count(domain.lo, domain.hi);
  if (domain.lo && !domain.lo_open && p.eval(*domain.lo) == 0) ++n;
  if (domain.hi && domain.hi_open && p.eval(*domain.hi) == 0) --n;
  return n;
}

}  // namespace pfpos
