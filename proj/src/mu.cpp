#include "pfpos/qe.hpp"

#include <algorithm>

namespace pfpos {

namespace {

// p mod m in x, where m is mu-free with nonzero leading coefficient.
Poly2 reduce_mod(const Poly2& p, const UniPoly& m) {
  const int dm = m.degree();
  std::vector<UniPoly> c = p.x_coeffs();
  for (int i = static_cast<int>(c.size()) - 1; i >= dm; --i) {
    if (c[static_cast<size_t>(i)].is_zero()) continue;
    UniPoly f = c[static_cast<size_t>(i)] * Rational(1 / m.lc());
    for (int k = 0; k <= dm; ++k) c[static_cast<size_t>(i - dm + k)] -= f * m.coeff(k);
  }
  if (static_cast<int>(c.size()) > dm) c.resize(static_cast<size_t>(std::max(dm, 0)));
  return Poly2(std::move(c));
}

int sign_by_refinement(const Poly2& p, RealAlgebraic x, RealAlgebraic mu) {
  Rational w = std::max(x.hi() - x.lo(), mu.hi() - mu.lo());
  for (;;) {
    auto [lo, hi] = interval_eval2(p, x.lo(), x.hi(), mu.lo(), mu.hi());
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    w /= 4;
    if (!x.is_rational()) x = x.refined(w);
    if (!mu.is_rational()) mu = mu.refined(w);
  }
}

}  // namespace

int sign_at2(const Poly2& p, const RealAlgebraic& x, const RealAlgebraic& mu) {
  if (p.is_zero()) return 0;
  if (mu.is_rational()) return sign_at(p.eval_mu(mu.rational_value()), x);
  if (x.is_rational()) return sign_at(p.eval_x(x.rational_value()), mu);

  const UniPoly& m = x.defining();
  Poly2 red = reduce_mod(p, m);
  // Drop leading x-coefficients that vanish at mu.
  std::vector<UniPoly> c = red.x_coeffs();
  while (!c.empty() && sign_at(c.back(), mu) == 0) c.pop_back();
  if (c.empty()) return 0;
  Poly2 t(std::move(c));
  if (t.degree_x() == 0) return sign_at(t.x_coeff(0), mu);

  // x is a root of t(., mu) iff x is a root of gcd(m, t(., mu)); that gcd is
  // the first subresultant whose principal coefficient survives at mu, and
  // all its real roots are roots of m, so a sign change across the
  // isolating interval of x decides.
  Poly2 mm = Poly2::from_x(m);
  auto psc = principal_subresultants(mm, t);
  int d = 0;
  while (d < static_cast<int>(psc.size()) && sign_at(psc[static_cast<size_t>(d)], mu) == 0) ++d;
  if (d > 0) {
    Poly2 g = d < static_cast<int>(psc.size()) ? subresultant(mm, t, d) : t;
    int sl = sign_at(g.eval_x(x.lo()), mu);
    int sh = sign_at(g.eval_x(x.hi()), mu);
    if (sl * sh < 0) return 0;
  }
  return sign_by_refinement(t, x, mu);
}

namespace {

Rational simple_between(RealAlgebraic a, RealAlgebraic b) {
  while (a.hi() >= b.lo()) {
    if (!a.is_rational()) a = a.bisected();
    if (!b.is_rational()) b = b.bisected();
  }
  return simplest_between(a.hi(), b.lo());
}

void sort_unique(std::vector<RealAlgebraic>& v) {
  std::sort(v.begin(), v.end(), [](const RealAlgebraic& a, const RealAlgebraic& b) { return alg_compare(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const RealAlgebraic& a, const RealAlgebraic& b) { return alg_compare(a, b) == 0; }),
          v.end());
}

}  // namespace

MuDecider::MuDecider(Recurrence rec) : rec_(std::move(rec)) {
  counterexamples_ = cone_counterexamples(universal_formula(0));
  for (const auto& p : counterexamples_.atom_polys()) atom_polys_.push_back(p);
}

std::vector<RealAlgebraic> MuDecider::poles_from(long xi) const {
  std::vector<RealAlgebraic> out;
  for (auto& pole : isolate_real_roots(rec_.leading(), Domain::at_least(Rational(xi)))) {
    if (pole.is_rational() && pole.rational_value().get_den() == 1)
      throw std::domain_error("leading coefficient vanishes at the integer " + to_string(pole.rational_value()));
    out.push_back(std::move(pole));
  }
  return out;
}

LinearConeFormula MuDecider::universal_formula(long xi) const {
  const int r = rec_.order();
  const Poly2 mu = Poly2::mu();
  LinearConeFormula f;
  LinearForm first;
  first.coeffs = {Poly2(Rational(1))};
  f.hypotheses.push_back(first);
  for (int k = 1; k < r; ++k) {
    LinearForm h;
    h.coeffs.assign(static_cast<size_t>(k + 1), Poly2());
    h.coeffs[static_cast<size_t>(k)] = Poly2(Rational(1));
    h.coeffs[static_cast<size_t>(k - 1)] = -mu;
    f.hypotheses.push_back(std::move(h));
  }
  const Poly2 lead = Poly2::from_x(rec_.leading());
  for (int j = 0; j < r; ++j) f.conclusion.coeffs.push_back(-(Poly2::from_x(rec_.coeff(j)) * lead));
  f.conclusion.coeffs.back() -= mu * lead * lead;
  f.x_domain = Domain::at_least(Rational(xi));
  f.excluded = poles_from(xi);
  return f;
}

bool MuDecider::universal_holds(long xi, const RealAlgebraic& mu) {
  const Domain domain = Domain::at_least(Rational(xi));
  const std::vector<RealAlgebraic> poles = poles_from(xi);
  if (counterexamples_.is_false()) return true;

  if (mu.is_rational()) {
    const Rational q = mu.rational_value();
    std::vector<UniPoly> polys;
    for (const auto& p : atom_polys_) polys.push_back(p.eval_mu(q));
    for (const auto& s : cell_samples(polys, domain, poles)) {
      std::map<Poly2, int> cache;
      bool hit = eval_signs(counterexamples_, [&](const Poly2& p) {
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
        int v = sign_at(p.eval_mu(q), s);
        cache.emplace(p, v);
        return v;
      });
      if (hit) return false;
    }
    return true;
  }

  auto counterexample_at = [&](const RealAlgebraic& x) {
    std::map<Poly2, int> cache;
    return eval_signs(counterexamples_, [&](const Poly2& p) {
      auto it = cache.find(p);
      if (it != cache.end()) return it->second;
      int v = sign_at2(p, x, mu);
      cache.emplace(p, v);
      return v;
    });
  };
  auto is_pole = [&](const RealAlgebraic& x) {
    return std::any_of(poles.begin(), poles.end(), [&](const RealAlgebraic& e) { return alg_compare(e, x) == 0; });
  };
  // Cheap rational probes first.
  for (long k = -1; k <= 10; ++k) {
    Rational x = Rational(xi) + (k < 0 ? Rational(1, 2) : Rational(Integer(1) << k) - 1);
    if (!is_pole(x) && counterexample_at(x)) return false;
  }
  // Full decomposition: the x-roots of every atom at this mu are among the
  // real roots of res_mu(P(x, mu), g(mu)).
  const UniPoly& g = mu.defining();
  std::vector<UniPoly> polys;
  for (const auto& p : atom_polys_) {
    if (p.degree_x() < 1) continue;
    UniPoly common = g;
    for (const auto& c : p.x_coeffs()) common = gcd(common, c);
    UniPoly gg = g;
    if (common.degree() > 0) {
      if (sign_at(common, mu) == 0) continue;  // p vanishes identically at mu
      gg = exact_div(g, common);
    }
    polys.push_back(resultant_x(p.transposed(), Poly2::from_x(gg)));
  }
  for (const auto& s : cell_samples(polys, domain, poles))
    if (counterexample_at(s)) return false;
  return true;
}

const std::vector<UniPoly>& MuDecider::static_projection() {
  if (projection_) return *projection_;
  std::vector<Poly2> polys = atom_polys_;
  polys.push_back(Poly2::from_x(rec_.leading()));
  std::set<UniPoly> out;
  auto add = [&](const UniPoly& u) {
    if (u.degree() >= 1) out.insert(squarefree_part(u));
  };
  for (const auto& p : polys) {
    for (const auto& c : p.x_coeffs()) add(c);
    if (p.degree_x() >= 2 && !p.mu_free())
      for (const auto& s : principal_subresultants(p, p.derivative_x())) add(s);
  }
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = i + 1; j < polys.size(); ++j) {
      if (polys[i].degree_x() < 1 || polys[j].degree_x() < 1) continue;
      if (polys[i].mu_free() && polys[j].mu_free()) continue;
      for (const auto& s : principal_subresultants(polys[i], polys[j])) add(s);
    }
  projection_ = std::vector<UniPoly>(out.begin(), out.end());
  return *projection_;
}

std::vector<RealAlgebraic> MuDecider::critical_mu(long xi) {
  std::set<UniPoly> polys(static_projection().begin(), static_projection().end());
  for (const auto& p : atom_polys_) {
    UniPoly u = p.eval_x(Rational(xi));
    if (u.degree() >= 1) polys.insert(squarefree_part(u));
  }
  std::vector<RealAlgebraic> out;
  for (const auto& u : polys)
    for (auto& r : isolate_real_roots(u, Domain::at_least(Rational(0)))) out.push_back(std::move(r));
  sort_unique(out);
  return out;
}

std::optional<RealAlgebraic> MuDecider::find_mu(long xi, const std::vector<RatioConstraint>& constraints) {
  Rational lo = 0;
  std::optional<Rational> hi;
  for (const auto& c : constraints) {
    if (c.b > 0) {
      Rational q = c.a / c.b;
      if (!hi || q < *hi) hi = q;
    } else if (c.b < 0) {
      Rational q = c.a / c.b;
      if (q > lo) lo = q;
    } else if (c.a < 0) {
      return std::nullopt;
    }
  }
  if (hi && *hi < lo) return std::nullopt;

  std::vector<RealAlgebraic> points{RealAlgebraic(lo)};
  if (hi) points.emplace_back(*hi);
  for (auto& m : critical_mu(xi)) {
    if (alg_compare(m, RealAlgebraic(lo)) <= 0) continue;
    if (hi && alg_compare(m, RealAlgebraic(*hi)) >= 0) continue;
    points.push_back(std::move(m));
  }
  sort_unique(points);

  std::vector<RealAlgebraic> candidates;
  for (size_t i = 0; i + 1 < points.size(); ++i) candidates.emplace_back(simple_between(points[i], points[i + 1]));
  if (!hi) candidates.emplace_back(Rational(floor(points.back().hi()) + 1));
  for (const auto& p : points)
    if (p.is_rational()) candidates.push_back(p);
  for (const auto& p : points)
    if (!p.is_rational()) candidates.push_back(p);

  for (const auto& c : candidates)
    if (universal_holds(xi, c)) return c;
  return std::nullopt;
}

std::optional<RealAlgebraic> decide_mu_exists(const Recurrence& rec, long n,
                                              const std::vector<RatioConstraint>& constraints) {
  MuDecider d(rec);
  return d.find_mu(n, constraints);
}

}  // namespace pfpos
