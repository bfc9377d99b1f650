#include "pfpos/qe.hpp"

#include <algorithm>
#include <sstream>

namespace pfpos {

const char* to_string(Rel rel) {
  switch (rel) {
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
  }
  return "?";
}

const Poly2& Row::coeff(int j) const {
  static const Poly2 zero;
  if (j < 0 || j >= static_cast<int>(a.size())) return zero;
  return a[static_cast<size_t>(j)];
}

bool Row::y_free() const {
  return std::all_of(a.begin(), a.end(), [](const Poly2& p) { return p.is_zero(); });
}

Row Row::negated() const {
  Row r;
  switch (rel) {
    case Rel::Ge:
    case Rel::Gt:
      for (const auto& c : a) r.a.push_back(-c);
      r.b = -b;
      r.rel = rel == Rel::Ge ? Rel::Gt : Rel::Ge;
      return r;
    case Rel::Eq: return {a, b, Rel::Ne};
    case Rel::Ne: return {a, b, Rel::Eq};
  }
  return r;
}

bool operator<(const Row& l, const Row& r) {
  if (l.rel != r.rel) return l.rel < r.rel;
  if (l.a != r.a) return l.a < r.a;
  return l.b < r.b;
}

namespace {

bool rel_holds(int sign, Rel rel) {
  switch (rel) {
    case Rel::Ge: return sign >= 0;
    case Rel::Gt: return sign > 0;
    case Rel::Eq: return sign == 0;
    case Rel::Ne: return sign != 0;
  }
  return false;
}

// Trims zero trailing coefficients and divides by the positive rational
// content. Returns 1 / 0 when the row is a true / false constant, -1
// otherwise.
int normalize(Row& row) {
  while (!row.a.empty() && row.a.back().is_zero()) row.a.pop_back();
  if (row.a.empty() && row.b.is_constant()) return rel_holds(sign(row.b.constant_value()), row.rel) ? 1 : 0;
  Integer den_lcm = 1, num_gcd = 0;
  auto scan = [&](const Poly2& p) {
    for (const auto& u : p.x_coeffs())
      for (const auto& c : u.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
      }
  };
  for (const auto& p : row.a) scan(p);
  scan(row.b);
  Rational s = make_rational(den_lcm, num_gcd);
  if (s != 1) {
    for (auto& p : row.a) p = p * s;
    row.b = row.b * s;
  }
  return -1;
}

// Drops conjuncts that contain another conjunct.
void absorb(std::vector<Formula::Conjunct>& cs) {
  std::sort(cs.begin(), cs.end(), [](const auto& l, const auto& r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return l < r;
  });
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  if (cs.size() > 4000) return;
  std::vector<Formula::Conjunct> kept;
  for (auto& c : cs) {
    bool redundant = false;
    for (const auto& k : kept)
      if (std::includes(c.begin(), c.end(), k.begin(), k.end())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(c));
  }
  cs = std::move(kept);
}

std::string render_sum(const Row& row) {
  std::vector<std::string> terms;
  for (size_t j = 0; j < row.a.size(); ++j)
    if (!row.a[j].is_zero()) terms.push_back("(" + row.a[j].to_string() + ")*y" + std::to_string(j));
  if (!row.b.is_zero() || terms.empty()) terms.push_back(row.b.to_string());
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + terms[i];
  return out;
}

}  // namespace

Formula Formula::truth(bool value) {
  Formula f;
  if (value) f.conjuncts_.emplace_back();
  return f;
}

bool Formula::is_true() const { return conjuncts_.size() == 1 && conjuncts_[0].empty(); }

Formula Formula::atom(Row row) { return conjunction({std::move(row)}); }

Formula Formula::conjunction(Conjunct rows) {
  Conjunct kept;
  for (auto& r : rows) {
    int t = normalize(r);
    if (t == 0) return truth(false);
    if (t == -1) kept.push_back(std::move(r));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  Formula f;
  f.conjuncts_.push_back(std::move(kept));
  return f;
}

Formula Formula::from_conjuncts(std::vector<Conjunct> cs) {
  Formula f;
  for (auto& c : cs) {
    Formula g = conjunction(std::move(c));
    if (g.is_false()) continue;
    if (g.is_true()) return truth(true);
    f.conjuncts_.push_back(std::move(g.conjuncts_[0]));
  }
  absorb(f.conjuncts_);
  return f;
}

Formula operator||(const Formula& l, const Formula& r) {
  if (l.is_true() || r.is_true()) return Formula::truth(true);
  std::vector<Formula::Conjunct> cs = l.conjuncts_;
  cs.insert(cs.end(), r.conjuncts_.begin(), r.conjuncts_.end());
  Formula f;
  f.conjuncts_ = std::move(cs);
  absorb(f.conjuncts_);
  return f;
}

Formula operator&&(const Formula& l, const Formula& r) {
  std::vector<Formula::Conjunct> cs;
  for (const auto& a : l.conjuncts_)
    for (const auto& b : r.conjuncts_) {
      Formula::Conjunct c = a;
      c.insert(c.end(), b.begin(), b.end());
      cs.push_back(std::move(c));
    }
  return Formula::from_conjuncts(std::move(cs));
}

Formula Formula::negated() const {
  Formula out = truth(true);
  for (const auto& c : conjuncts_) {
    Formula d = truth(false);
    for (const auto& r : c) d = d || atom(r.negated());
    out = out && d;
    if (out.is_false()) break;
  }
  return out;
}

bool Formula::eval(const Rational& x, const Rational& mu, const std::vector<Rational>& y) const {
  for (const auto& c : conjuncts_) {
    bool all = true;
    for (const auto& r : c) {
      Rational v = r.b.eval(x, mu);
      for (size_t j = 0; j < r.a.size(); ++j) {
        if (r.a[j].is_zero()) continue;
        if (j >= y.size()) throw std::invalid_argument("Formula::eval: missing y value");
        v += r.a[j].eval(x, mu) * y[j];
      }
      if (!rel_holds(sign(v), r.rel)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::set<Poly2> Formula::atom_polys() const {
  std::set<Poly2> out;
  for (const auto& c : conjuncts_)
    for (const auto& r : c) {
      if (!r.y_free()) throw std::invalid_argument("atom_polys: formula still mentions y");
      Poly2 p = r.b.primitive();
      const UniPoly& top = p.x_coeff(p.degree_x());
      if (top.lc() < 0) p = -p;
      out.insert(std::move(p));
    }
  return out;
}

std::string Formula::to_sexpr() const {
  if (is_false()) return "false";
  if (is_true()) return "true";
  std::ostringstream out;
  out << "(or";
  for (const auto& c : conjuncts_) {
    out << "\n  (and";
    for (const auto& r : c) out << " (" << to_string(r.rel) << " " << render_sum(r) << " 0)";
    out << ")";
  }
  out << ")";
  return out.str();
}

int SignOracle::sign_on_domain(const Poly2& p) {
  if (p.is_zero()) return 0;
  if (p.is_constant()) return sign(p.constant_value());
  if (!p.mu_free()) return kUnknown;
  UniPoly u = p.to_x();
  auto it = cache_.find(u);
  if (it != cache_.end()) return it->second;
  int result = kUnknown;
  if (count_real_roots(u, domain_) == 0) {
    Rational at = 0;
    if (domain_.lo && domain_.hi) at = (*domain_.lo + *domain_.hi) / 2;
    else if (domain_.lo) at = *domain_.lo + 1;
    else if (domain_.hi) at = *domain_.hi - 1;
    result = sign(u.eval(at));
  }
  cache_.emplace(std::move(u), result);
  return result;
}

}  // namespace pfpos
