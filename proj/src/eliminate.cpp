#include "pfpos/qe.hpp"

#include <algorithm>
#include <sstream>

namespace pfpos {

namespace {

int known_sign(const Poly2& p, SignOracle* oracle) {
  if (oracle) return oracle->sign_on_domain(p);
  if (p.is_zero()) return 0;
  if (p.is_constant()) return sign(p.constant_value());
  return SignOracle::kUnknown;
}

bool rel_holds(int s, Rel rel) {
  switch (rel) {
    case Rel::Ge: return s >= 0;
    case Rel::Gt: return s > 0;
    case Rel::Eq: return s == 0;
    case Rel::Ne: return s != 0;
  }
  return false;
}

// a_i * row_k - a_k * row_i, where a_* is the coefficient of var.
Row combine(const Row& ri, const Row& rk, int var, Rel rel) {
  const Poly2& ai = ri.coeff(var);
  const Poly2& ak = rk.coeff(var);
  Row out;
  const size_t n = std::max(ri.a.size(), rk.a.size());
  out.a.resize(n);
  for (size_t j = 0; j < n; ++j) {
    if (static_cast<int>(j) == var) continue;
    const Poly2& cij = ri.coeff(static_cast<int>(j));
    const Poly2& ckj = rk.coeff(static_cast<int>(j));
    if (cij.is_zero() && ckj.is_zero()) continue;
    out.a[j] = ai * ckj - ak * cij;
  }
  out.b = ai * rk.b - ak * ri.b;
  out.rel = rel;
  return out;
}

Row drop_var(const Row& r, int var) {
  Row out = r;
  if (var < static_cast<int>(out.a.size())) out.a[static_cast<size_t>(var)] = Poly2();
  return out;
}

// Resolves y-free atoms whose sign is known on the domain. Returns false
// when the conjunct becomes unsatisfiable.
bool resolve_known(Formula::Conjunct& c, SignOracle* oracle) {
  if (!oracle) return true;
  Formula::Conjunct kept;
  for (auto& r : c) {
    if (r.y_free()) {
      int s = oracle->sign_on_domain(r.b);
      if (s != SignOracle::kUnknown) {
        if (!rel_holds(s, r.rel)) return false;
        continue;
      }
    }
    kept.push_back(std::move(r));
  }
  c = std::move(kept);
  return true;
}

void eliminate_conjunct(const Formula::Conjunct& rows, int var, SignOracle* oracle,
                        std::vector<Formula::Conjunct>& out) {
  Formula::Conjunct free;
  std::vector<const Row*> bound;
  for (const auto& r : rows) {
    if (r.coeff(var).is_zero()) free.push_back(r);
    else bound.push_back(&r);
  }
  if (bound.empty()) {
    out.push_back(rows);
    return;
  }
  std::vector<int> s(bound.size());
  bool has_pos = false;
  for (size_t i = 0; i < bound.size(); ++i) {
    s[i] = known_sign(bound[i]->coeff(var), oracle);
    if (s[i] == 1) has_pos = true;
  }

  auto emit = [&](std::vector<Formula::Conjunct>& partial) {
    for (auto& c : partial)
      if (resolve_known(c, oracle)) out.push_back(std::move(c));
  };

  for (size_t i = 0; i < bound.size(); ++i) {
    if (s[i] == -1 || s[i] == 0) continue;
    const Row& ri = *bound[i];
    Formula::Conjunct base = free;
    if (s[i] != 1) base.push_back(Row::atom(ri.coeff(var), Rel::Gt));
    std::vector<Formula::Conjunct> partial{base};
    for (size_t k = 0; k < bound.size(); ++k) {
      if (k == i) continue;
      const Row& rk = *bound[k];
      if (ri.rel == Rel::Ge) {
        for (auto& c : partial) c.push_back(combine(ri, rk, var, rk.rel));
        continue;
      }
      // y = t + epsilon: T > 0, or T = 0 with the epsilon term a_k rel 0.
      Row t_pos = combine(ri, rk, var, Rel::Gt);
      int sk = s[k];
      bool eps_ok_known = sk != SignOracle::kUnknown;
      bool eps_ok = eps_ok_known && rel_holds(sk, rk.rel);
      if (eps_ok_known) {
        Row t = combine(ri, rk, var, eps_ok ? Rel::Ge : Rel::Gt);
        for (auto& c : partial) c.push_back(t);
        continue;
      }
      std::vector<Formula::Conjunct> next;
      for (auto& c : partial) {
        Formula::Conjunct c1 = c;
        c1.push_back(t_pos);
        next.push_back(std::move(c1));
        Formula::Conjunct c2 = std::move(c);
        c2.push_back(combine(ri, rk, var, Rel::Eq));
        c2.push_back(Row::atom(rk.coeff(var), rk.rel));
        next.push_back(std::move(c2));
      }
      partial = std::move(next);
    }
    emit(partial);
  }

  if (!has_pos) {
    // y -> -infinity
    std::vector<Formula::Conjunct> partial{free};
    for (size_t k = 0; k < bound.size(); ++k) {
      if (s[k] == -1) continue;
      const Row& rk = *bound[k];
      std::vector<Formula::Conjunct> next;
      for (auto& c : partial) {
        Formula::Conjunct c1 = c;
        c1.push_back(Row::atom(-rk.coeff(var), Rel::Gt));
        next.push_back(std::move(c1));
        Formula::Conjunct c2 = std::move(c);
        c2.push_back(Row::atom(rk.coeff(var), Rel::Eq));
        c2.push_back(drop_var(rk, var));
        next.push_back(std::move(c2));
      }
      partial = std::move(next);
    }
    emit(partial);
  }
}

}  // namespace

Formula eliminate_linear_var(const Formula& f, int var, SignOracle* oracle) {
  std::vector<Formula::Conjunct> out;
  for (const auto& c : f.conjuncts()) {
    std::vector<Formula::Conjunct> branches{{}};
    for (const auto& r : c) {
      if (r.coeff(var).is_zero() || r.rel == Rel::Ge || r.rel == Rel::Gt) {
        for (auto& b : branches) b.push_back(r);
        continue;
      }
      Row pos = r, neg = r.negated();
      if (r.rel == Rel::Eq) {
        // a y + b = 0  <=>  a y + b >= 0 and -a y - b >= 0
        neg = Row{{}, -r.b, Rel::Ge};
        for (const auto& p : r.a) neg.a.push_back(-p);
        pos.rel = Rel::Ge;
        for (auto& b : branches) {
          b.push_back(pos);
          b.push_back(neg);
        }
        continue;
      }
      // a y + b != 0  <=>  a y + b > 0 or -a y - b > 0
      pos.rel = Rel::Gt;
      neg = Row{{}, -r.b, Rel::Gt};
      for (const auto& p : r.a) neg.a.push_back(-p);
      std::vector<Formula::Conjunct> next;
      for (auto& b : branches) {
        Formula::Conjunct b1 = b;
        b1.push_back(pos);
        next.push_back(std::move(b1));
        b.push_back(neg);
        next.push_back(std::move(b));
      }
      branches = std::move(next);
    }
    for (const auto& b : branches) eliminate_conjunct(b, var, oracle, out);
  }
  return Formula::from_conjuncts(std::move(out));
}

bool eval_signs(const Formula& f, const std::function<int(const Poly2&)>& sign_of) {
  for (const auto& c : f.conjuncts()) {
    bool all = true;
    for (const auto& r : c) {
      if (!r.y_free()) throw std::invalid_argument("eval_signs: formula still mentions y");
      if (!rel_holds(sign_of(r.b), r.rel)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool eval_at(const Formula& f, const RealAlgebraic& x) {
  std::map<Poly2, int> cache;
  return eval_signs(f, [&](const Poly2& p) {
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    int s = sign_at(p.to_x(), x);
    cache.emplace(p, s);
    return s;
  });
}

std::vector<RealAlgebraic> cell_samples(const std::vector<UniPoly>& polys, const Domain& domain,
                                        const std::vector<RealAlgebraic>& excluded) {
  std::vector<RealAlgebraic> bounds;
  for (const auto& p : polys) {
    if (p.degree() < 1) continue;
    for (auto& r : isolate_real_roots(squarefree_part(p), domain)) bounds.push_back(std::move(r));
  }
  for (const auto& e : excluded)
    if (domain.contains(e)) bounds.push_back(e);
  if (domain.lo) bounds.emplace_back(*domain.lo);
  if (domain.hi) bounds.emplace_back(*domain.hi);
  auto less = [](const RealAlgebraic& a, const RealAlgebraic& b) { return alg_compare(a, b) < 0; };
  std::sort(bounds.begin(), bounds.end(), less);
  bounds.erase(std::unique(bounds.begin(), bounds.end(),
                           [](const RealAlgebraic& a, const RealAlgebraic& b) { return alg_compare(a, b) == 0; }),
               bounds.end());

  auto is_excluded = [&](const RealAlgebraic& a) {
    return std::any_of(excluded.begin(), excluded.end(),
                       [&](const RealAlgebraic& e) { return alg_compare(a, e) == 0; });
  };
  std::vector<RealAlgebraic> out;
  if (bounds.empty()) {
    out.emplace_back(Rational(0));
    return out;
  }
  if (!domain.lo) out.emplace_back(Rational(floor(bounds.front().lo()) - 1));
  for (size_t i = 0; i < bounds.size(); ++i) {
    if (domain.contains(bounds[i]) && !is_excluded(bounds[i])) out.push_back(bounds[i]);
    if (i + 1 < bounds.size()) out.emplace_back(rational_between(bounds[i], bounds[i + 1]));
  }
  if (!domain.hi) out.emplace_back(Rational(ceil(bounds.back().hi()) + 1));
  return out;
}

namespace {

std::vector<UniPoly> x_polys(const Formula& f) {
  std::vector<UniPoly> polys;
  for (const auto& p : f.atom_polys()) {
    if (!p.mu_free()) throw std::invalid_argument("univariate decision: formula mentions mu");
    polys.push_back(p.to_x());
  }
  return polys;
}

}  // namespace

bool decide_univariate(const Formula& f, const Domain& domain, const std::vector<RealAlgebraic>& excluded) {
  if (f.is_true()) return true;
  for (const auto& s : cell_samples(x_polys(f), domain, excluded))
    if (!eval_at(f, s)) return false;
  return true;
}

std::vector<Rational> LinearForm::eval(const Rational& x, const Rational& mu) const {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(c.eval(x, mu));
  return v;
}

int LinearConeFormula::dimension() const {
  size_t d = conclusion.coeffs.size();
  for (const auto& h : hypotheses) d = std::max(d, h.coeffs.size());
  return static_cast<int>(d);
}

std::string LinearConeFormula::to_string() const {
  auto form = [](const LinearForm& f) {
    Row r{f.coeffs, f.constant, Rel::Ge};
    return Formula::atom(r).to_sexpr();
  };
  std::ostringstream out;
  out << "(forall-cone";
  if (x_domain.lo) out << " (x " << (x_domain.lo_open ? ">" : ">=") << " " << pfpos::to_string(*x_domain.lo) << ")";
  if (x_domain.hi) out << " (x " << (x_domain.hi_open ? "<" : "<=") << " " << pfpos::to_string(*x_domain.hi) << ")";
  for (const auto& e : excluded) out << " (x != " << e.to_string() << ")";
  out << "\n  (hyp";
  for (const auto& h : hypotheses) out << "\n    " << form(h);
  out << ")\n  (concl " << form(conclusion) << "))";
  return out.str();
}

ClearedRows clear_denominators(const std::vector<std::vector<RatFunc>>& rows, const Domain& domain) {
  ClearedRows out;
  for (const auto& row : rows) {
    UniPoly d = UniPoly::constant(1);
    for (const auto& q : row) {
      const UniPoly& den = q.denom();
      if (den.degree() == 0) continue;
      UniPoly g = gcd(d, den);
      d = d * exact_div(den, g);
    }
    LinearForm f;
    for (const auto& q : row) f.coeffs.push_back(Poly2::from_x(q.numer() * exact_div(d, q.denom()) * d));
    out.forms.push_back(std::move(f));
    if (d.degree() < 1) continue;
    for (auto& pole : isolate_real_roots(d, domain)) {
      if (pole.is_rational() && pole.rational_value().get_den() == 1)
        throw std::domain_error("integer pole at x = " + pfpos::to_string(pole.rational_value()) +
                                " inside the domain");
      bool seen = std::any_of(out.excluded.begin(), out.excluded.end(),
                              [&](const RealAlgebraic& e) { return alg_compare(e, pole) == 0; });
      if (!seen) out.excluded.push_back(std::move(pole));
    }
  }
  return out;
}

namespace {

// Divides a row by the common x-factor of all its entries when that factor
// has constant sign on the domain.
Row reduce_row(Row r, SignOracle& oracle) {
  UniPoly g;
  auto scan = [&](const Poly2& p) {
    if (p.is_zero()) return;
    const Poly2 t = p.transposed();
    for (const auto& c : t.x_coeffs()) g = gcd(g, c);
  };
  for (const auto& c : r.a) scan(c);
  scan(r.b);
  if (g.degree() < 1) return r;
  int s = oracle.sign_on_domain(Poly2::from_x(g));
  if (s != 1 && s != -1) return r;
  auto divide = [&](Poly2& p) {
    if (p.is_zero()) return;
    const Poly2 tp = p.transposed();
    std::vector<UniPoly> t;
    for (const auto& c : tp.x_coeffs()) t.push_back(exact_div(c, g) * Rational(s));
    p = Poly2(std::move(t)).transposed();
  };
  for (auto& c : r.a) divide(c);
  divide(r.b);
  return r;
}

}  // namespace

Formula cone_counterexamples(const LinearConeFormula& f) {
  const int dim = f.dimension();
  SignOracle oracle(f.x_domain);
  Formula::Conjunct rows;
  bool homogeneous = f.conclusion.homogeneous();
  for (const auto& h : f.hypotheses) {
    rows.push_back(reduce_row(Row{h.coeffs, h.constant, Rel::Ge}, oracle));
    homogeneous = homogeneous && h.homogeneous();
  }
  Row concl = reduce_row(Row{f.conclusion.coeffs, f.conclusion.constant, Rel::Ge}, oracle);
  Row neg;
  for (const auto& c : concl.a) neg.a.push_back(-c);
  if (homogeneous) {
    // Scaling y keeps the hypotheses, so conclusion < 0 may be sharpened to
    // conclusion <= -1.
    neg.b = Poly2(Rational(-1));
    neg.rel = Rel::Ge;
  } else {
    neg.b = -concl.b;
    neg.rel = Rel::Gt;
  }
  rows.push_back(std::move(neg));
  Formula e = Formula::conjunction(std::move(rows));
  for (int var = dim - 1; var >= 0; --var) e = eliminate_linear_var(e, var, &oracle);
  return e;
}

namespace {

bool probe_ready(const LinearConeFormula& f) {
  auto free = [](const LinearForm& l) {
    return l.homogeneous() && std::all_of(l.coeffs.begin(), l.coeffs.end(), [](const Poly2& c) { return c.mu_free(); });
  };
  return free(f.conclusion) && std::all_of(f.hypotheses.begin(), f.hypotheses.end(), free);
}

// A failing point refutes the universal statement without elimination.
bool refuted_by_probe(const LinearConeFormula& f) {
  if (!probe_ready(f)) return false;
  const Rational base = f.x_domain.lo ? *f.x_domain.lo : Rational(0);
  for (long step : {0L, 1L, 10L, 1000L}) {
    Rational x = base + step;
    if (!f.x_domain.contains(x)) continue;
    bool excluded = std::any_of(f.excluded.begin(), f.excluded.end(),
                                [&](const RealAlgebraic& p) { return alg_compare(p, RealAlgebraic(x)) == 0; });
    if (!excluded && !farkas_decide_at(f, x)) return true;
  }
  return false;
}

}  // namespace

bool decide_cone_formula(const LinearConeFormula& f) {
  if (refuted_by_probe(f)) return false;
  Formula e = cone_counterexamples(f);
  if (e.is_false()) return true;
  for (const auto& s : cell_samples(x_polys(e), f.x_domain, f.excluded))
    if (eval_at(e, s)) return false;
  return true;
}

}  // namespace pfpos
