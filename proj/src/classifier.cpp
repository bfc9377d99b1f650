#include "pfpos/classifier.hpp"

#include "pfpos/image.hpp"
#include "pfpos/qe.hpp"
#include "pfpos/roots.hpp"
#include "pfpos/serialize.hpp"

#include <algorithm>

namespace pfpos {

const char* to_string(GKPrediction p) {
  switch (p) {
    case GKPrediction::ProvenTerminates: return "proven-terminates";
    case GKPrediction::ConjecturedTerminates: return "conjectured-terminates";
    case GKPrediction::ProvenNonTerminating: return "proven-non-terminating";
    case GKPrediction::ExpectedNonTerminating: return "expected-non-terminating";
    case GKPrediction::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(MuPrediction p) {
  switch (p) {
    case MuPrediction::ProvenTerminatesGeneric: return "proven-terminates-generic";
    case MuPrediction::ProvenNonTerminating: return "proven-non-terminating";
    case MuPrediction::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(ProbeResult p) {
  switch (p) {
    case ProbeResult::Passed: return "passed";
    case ProbeResult::Failed: return "failed";
    case ProbeResult::Skipped: return "skipped";
  }
  return "?";
}

const char* to_string(GKRegion r) {
  switch (r) {
    case GKRegion::Triangle: return "triangle";
    case GKRegion::Length4: return "length4";
    case GKRegion::ConjectureOnly: return "conjecture-only";
    case GKRegion::Outside: return "outside";
  }
  return "?";
}

namespace {

// Polynomials in (u, v) are Poly2 with x = u and mu = v.
const Poly2 U = Poly2::x(), V = Poly2::mu();
Poly2 K(long c) { return Poly2(Rational(c)); }

int sg(const Poly2& p, const RealAlgebraic& u, const RealAlgebraic& v) { return sign_at2(p, u, v); }

}  // namespace

bool in_eigen_triangle(const RealAlgebraic& u, const RealAlgebraic& v) {
  const Poly2 abs_u = sign(u) >= 0 ? U : -U;
  return sg(abs_u - K(1) - V, u, v) < 0 && sg(V - K(1), u, v) < 0;
}

bool region_mu_order3(const RealAlgebraic& u, const RealAlgebraic& v) {
  return in_eigen_triangle(u, v) && sg(K(4) * V - (U + K(1)) * (U + K(1)), u, v) < 0 && sg(U - K(1), u, v) < 0;
}

bool conjecture_clause(const RealAlgebraic& u, const RealAlgebraic& v) {
  if (sg(U - K(1), u, v) > 0 && sign(v) > 0) return true;
  return sg(K(4) * V - (U + K(1)) * (U + K(1)), u, v) > 0;
}

bool no_positive_root(const RealAlgebraic& u, const RealAlgebraic& v) {
  if (sign(v) <= 0) return false;
  return sign(u) > 0 || sg(U * U - K(4) * V, u, v) < 0;
}

GKRegion region_gk_order3(const RealAlgebraic& u, const RealAlgebraic& v) {
  if (!in_eigen_triangle(u, v)) return GKRegion::Outside;
  const int su = sign(u), sv = sign(v);
  if (sv > 0 && sg(U - V, u, v) > 0 && sg(U - K(1), u, v) < 0) return GKRegion::Triangle;
  if (sg(U - K(1), u, v) < 0 && sv > 0 && sg(K(1) - U + U * U - V, u, v) > 0 &&
      (su > 0 || sg(U * U - V - U * V + V * V, u, v) < 0))
    return GKRegion::Length4;
  if (no_positive_root(u, v)) return GKRegion::ConjectureOnly;
  return GKRegion::Outside;
}

ProbeResult genericity_probe(const SequenceSpec& spec, const RealAlgebraic& lambda, long N, const Rational& tol,
                             std::string* note) {
  Sequence s(spec);
  std::vector<Rational> ratios;
  for (long n = N / 2; n < N; ++n)
    if (s[n] != 0) ratios.push_back(s[n + 1] / s[n]);
  if (ratios.empty()) {
    if (note) *note = "heuristic: all sampled terms are zero";
    return ProbeResult::Failed;
  }
  if (!(tol > 0 && tol < 1)) throw std::invalid_argument("probe tolerance must lie in (0, 1)");
  const size_t tail = std::max<size_t>(1, ratios.size() / 4);
  for (size_t i = ratios.size() - tail; i < ratios.size(); ++i) {
    const Rational& q = ratios[i];
    // lambda (1 - tol) < q < lambda (1 + tol)
    const bool near = q > 0 && alg_compare(RealAlgebraic(Rational(q / (1 + tol))), lambda) < 0 &&
                      alg_compare(RealAlgebraic(Rational(q / (1 - tol))), lambda) > 0;
    if (!near) {
      if (note) *note = "heuristic: f(n+1)/f(n) = " + q.get_str() + " is not within relative " + tol.get_str() + " of the dominant eigenvalue";
      return ProbeResult::Failed;
    }
  }
  if (note) *note = "heuristic: ratios within relative " + tol.get_str() + " of the dominant eigenvalue";
  return ProbeResult::Passed;
}

namespace {

bool is_cfinite(const Recurrence& rec) {
  for (int i = 0; i <= rec.order(); ++i)
    if (rec.coeff(i).degree() > 0) return false;
  return true;
}

// Least n0 >= 0 beyond every real root of p_0 p_1 p_2, provided both ratios
// -p_0/p_2 and -p_1/p_2 are positive there.
std::optional<long> order2_bound(const Recurrence& rec) {
  const UniPoly prod = rec.coeff(0) * rec.coeff(1) * rec.coeff(2);
  long n0 = 0;
  if (prod.degree() > 0) {
    auto roots = isolate_real_roots(squarefree_part(prod));
    if (!roots.empty()) {
      RealAlgebraic top = roots.back();
      while (floor(top.lo()) != floor(top.hi())) top = top.bisected();
      n0 = std::max(0L, floor(top.hi()).get_si() + 1);
    }
  }
  const Rational at(n0);
  if (sign_at(-(rec.coeff(0) * rec.coeff(2)), at) > 0 && sign_at(-(rec.coeff(1) * rec.coeff(2)), at) > 0) return n0;
  return std::nullopt;
}

}  // namespace

ClassifierReport classify(const SequenceSpec& spec, long probe_terms, const Rational& probe_tol) {
  ClassifierReport rep;
  const Recurrence& rec = spec.rec;
  rep.order = rec.order();
  rep.balanced = is_balanced(rec);
  if (rep.order == 1) {
    rep.complete_decision = true;
    rep.gk_reason = rep.mu_reason = "order 1: complete decision available";
    return rep;
  }
  if (!rep.balanced) {
    rep.gk_reason = rep.mu_reason = "unbalanced recurrence: no eigenvalue analysis";
    return rep;
  }
  rep.char_poly = characteristic_polynomial(rec);
  if (rep.order > 3) {
    rep.dominance = DominanceKind::UnsupportedOrder;
    rep.gk_reason = rep.mu_reason = "order above 3 is not covered";
    return rep;
  }
  CharPolyFactorization fac = dominance_analysis(*rep.char_poly);
  rep.dominance = fac.kind;
  rep.dominant = fac.dominant;
  rep.u = fac.residual_u;
  rep.v = fac.residual_v;
  if (fac.kind != DominanceKind::RealPositive) {
    rep.gk_reason = rep.mu_reason = std::string("dominant eigenvalue: ") + to_string(fac.kind);
    if (fac.kind == DominanceKind::NoneRealPositive)
      rep.notes.push_back("no real positive dominant eigenvalue: generic solutions change sign infinitely often");
    return rep;
  }
  rep.probe = genericity_probe(spec, *rep.dominant, probe_terms, probe_tol, &rep.probe_note);
  const std::string generic = std::string(" (generic initial values; probe ") + to_string(rep.probe) + ")";
  const bool cfinite = is_cfinite(rec);
  const RealAlgebraic& u = *rep.u;

  if (rep.order == 2) {
    const int su = sign(u);
    const bool above_minus_one = alg_compare(u, RealAlgebraic(Rational(-1))) > 0;
    const bool below_one = alg_compare(u, RealAlgebraic(Rational(1))) < 0;
    if (su < 0 && above_minus_one) {
      rep.gk = GKPrediction::ProvenTerminates;
      rep.gk_reason = "u in (-1, 0)";
      rep.gk_iteration_bound = order2_bound(rec);
    } else if (su > 0 && below_one) {
      if (cfinite) {
        rep.gk = GKPrediction::ProvenNonTerminating;
        rep.gk_reason = "0 < u < 1: some solution has any given run of nonnegative terms";
      } else {
        rep.gk = GKPrediction::ExpectedNonTerminating;
        rep.gk_reason = "0 < u < 1: non-termination expected for generic initial values";
      }
    } else {
      rep.gk_reason = "u outside the covered intervals";
    }
    if (su != 0 && above_minus_one && below_one) {
      rep.mu = MuPrediction::ProvenTerminatesGeneric;
      rep.mu_reason = "u in (-1, 1) \\ {0}" + generic;
    } else {
      rep.mu_reason = "u outside (-1, 1) \\ {0}";
    }
    return rep;
  }

  const RealAlgebraic& v = *rep.v;
  const bool triangle = in_eigen_triangle(u, v);
  rep.region = region_gk_order3(u, v);
  rep.conjecture_clause = conjecture_clause(u, v);
  rep.conjecture_no_positive_root = no_positive_root(u, v);
  if (*rep.conjecture_clause != *rep.conjecture_no_positive_root)
    rep.notes.push_back("conjecture phrasings disagree at this (u, v)");

  if (region_mu_order3(u, v)) {
    rep.mu = MuPrediction::ProvenTerminatesGeneric;
    rep.mu_reason = "|u|-1 < v < 1, 4v < (u+1)^2, u < 1" + generic;
  } else if (cfinite && triangle &&
             (alg_compare(u, RealAlgebraic(Rational(1))) > 0 ||
              sign_at2(Poly2(Rational(4)) * V - (U + K(1)) * (U + K(1)), u, v) > 0)) {
    rep.mu = MuPrediction::ProvenNonTerminating;
    rep.mu_reason = "no mu > 0 makes the induction step true (C-finite); only a negative term ends the search";
  } else {
    rep.mu_reason = triangle ? "on or beyond the boundary 4v = (u+1)^2 or u = 1" : "outside the eigenvalue triangle";
  }

  switch (*rep.region) {
    case GKRegion::Triangle:
      rep.gk = GKPrediction::ProvenTerminates;
      rep.gk_reason = "triangle (0,0), (1,0), (1,1)";
      break;
    case GKRegion::Length4:
      rep.gk = GKPrediction::ProvenTerminates;
      rep.gk_reason = "induction hypothesis of length four";
      break;
    case GKRegion::ConjectureOnly:
      rep.gk = GKPrediction::ConjecturedTerminates;
      rep.gk_reason = "conjecture: x^2 + u x + v has no positive root";
      break;
    case GKRegion::Outside:
      rep.gk_reason = triangle ? "x^2 + u x + v has a positive root; the conjecture predicts non-termination"
                               : "outside the eigenvalue triangle";
      break;
  }
  return rep;
}

nlohmann::json to_json(const ClassifierReport& r) {
  nlohmann::json j;
  j["order"] = r.order;
  j["balanced"] = r.balanced;
  j["complete_decision"] = r.complete_decision;
  j["char_poly"] = r.char_poly ? to_json(*r.char_poly) : nlohmann::json();
  j["dominance"] = to_string(r.dominance);
  j["dominant"] = r.dominant ? to_json(*r.dominant) : nlohmann::json();
  j["u"] = r.u ? to_json(*r.u) : nlohmann::json();
  j["v"] = r.v ? to_json(*r.v) : nlohmann::json();
  j["gk_prediction"] = {{"status", to_string(r.gk)}, {"reason", r.gk_reason}};
  j["mu_prediction"] = {{"status", to_string(r.mu)}, {"reason", r.mu_reason}};
  j["region"] = r.region ? nlohmann::json(to_string(*r.region)) : nlohmann::json();
  if (r.conjecture_clause) j["conjecture_clause"] = *r.conjecture_clause;
  if (r.conjecture_no_positive_root) j["conjecture_no_positive_root"] = *r.conjecture_no_positive_root;
  if (r.gk_iteration_bound) j["gk_iteration_bound"] = *r.gk_iteration_bound;
  j["genericity_probe"] = {{"result", to_string(r.probe)}, {"note", r.probe_note}};
  j["notes"] = r.notes;
  return j;
}

bool d2_contains(const Rational& c0, const Rational& c1) {
  return 0 < c1 && c1 < 2 && -c1 * c1 / 4 < c0 && c0 < 1;
}

bool d3_order2_contains(const Rational& c0, const Rational& c1, const Rational& mu) {
  return 0 < mu && mu < 1 && mu < c1 && c1 < 2 && mu * (mu - c1) < c0 && c0 < 1;
}

bool d3_contains(const Rational& c0, const Rational& c1, const Rational& c2) {
  if (0 < c2 && c2 < 1 && c1 >= c2 * c2 && c0 + c1 * c2 > 0) return true;
  if (!(0 < c2 && c2 < 2 && -c2 * c2 / 4 < c1 && c1 < std::min<Rational>(3 - 2 * c2, c2 * c2))) return false;
  // 2 c2^3 + 9 c1 c2 + 27 c0 + 2 s^(3/2) > 0 with s = c2^2 + 3 c1 > 0
  const Rational a = 2 * c2 * c2 * c2 + 9 * c1 * c2 + 27 * c0;
  const Rational s = c2 * c2 + 3 * c1;
  return a >= 0 || 4 * s * s * s > a * a;
}

bool d4_contains(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& mu) {
  return 0 < mu && mu < 1 && mu < c2 && mu * (mu - c2) < c1 && mu * mu * mu - c2 * mu * mu - c1 * mu < c0;
}

namespace {

// Sorted distinct real roots in (lo, hi) of the given polynomials, with lo
// and hi themselves as the outer boundaries.
std::vector<RealAlgebraic> boundaries(const std::vector<UniPoly>& polys, const Rational& lo, const Rational& hi) {
  std::vector<RealAlgebraic> pts{RealAlgebraic(lo), RealAlgebraic(hi)};
  Domain open{lo, hi, true, true};
  for (const auto& p : polys)
    if (p.degree() > 0)
      for (auto& r : isolate_real_roots(squarefree_part(p), open)) pts.push_back(std::move(r));
  std::sort(pts.begin(), pts.end(), [](const RealAlgebraic& a, const RealAlgebraic& b) { return alg_compare(a, b) < 0; });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const RealAlgebraic& a, const RealAlgebraic& b) { return alg_compare(a, b) == 0; }),
            pts.end());
  return pts;
}

template <class Pred>
std::optional<Rational> first_open_cell(const std::vector<RealAlgebraic>& pts, Pred pred) {
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    Rational q = rational_between(pts[i], pts[i + 1]);
    if (pred(q)) return q;
  }
  return std::nullopt;
}

UniPoly upoly(std::vector<Rational> c) { return UniPoly(std::move(c)); }

}  // namespace

std::optional<Rational> d3_order2_mu(const Rational& c0, const Rational& c1) {
  auto pts = boundaries({upoly({-c1, 1}), upoly({-c0, -c1, 1})}, Rational(0), Rational(1));
  return first_open_cell(pts, [&](const Rational& mu) { return d3_order2_contains(c0, c1, mu); });
}

std::optional<Rational> d4_mu(const Rational& c0, const Rational& c1, const Rational& c2) {
  auto pts = boundaries({upoly({-c2, 1}), upoly({-c1, -c2, 1}), upoly({-c0, -c1, -c2, 1})}, Rational(0), Rational(1));
  return first_open_cell(pts, [&](const Rational& mu) { return d4_contains(c0, c1, c2, mu); });
}

bool mu_cone_implication(const std::vector<Rational>& c, const Rational& mu) {
  const size_t r = c.size();
  std::vector<std::vector<Rational>> gens;
  std::vector<Rational> e0(r);
  e0[0] = 1;
  gens.push_back(e0);
  for (size_t k = 1; k < r; ++k) {
    std::vector<Rational> row(r);
    row[k - 1] = -mu;
    row[k] = 1;
    gens.push_back(std::move(row));
  }
  std::vector<Rational> target = c;
  target[r - 1] -= mu;
  return cone_contains(gens, target);
}

bool cfinite_mu_exists(const Rational& u, const Rational& v) {
  const std::vector<Rational> c{v, u - v, 1 - u};
  // With z_0 = y_0, z_k = y_k - mu y_{k-1} the step holds iff every
  // g_k(mu) = sum_{j>=k} c_j mu^(j-k) - mu^(3-k) is nonnegative.
  const std::vector<UniPoly> g{upoly({c[0], c[1], c[2], -1}), upoly({c[1], c[2], -1}), upoly({c[2], -1})};
  Rational top = 2;
  for (const auto& p : g) top = std::max<Rational>(top, root_bound(p) + 1);
  auto pts = boundaries(g, Rational(0), top);
  if (first_open_cell(pts, [&](const Rational& mu) { return mu_cone_implication(c, mu); })) return true;
  for (size_t i = 1; i + 1 < pts.size(); ++i) {
    if (pts[i].is_rational()) {
      if (mu_cone_implication(c, pts[i].rational_value())) return true;
      continue;
    }
    if (std::all_of(g.begin(), g.end(), [&](const UniPoly& p) { return sign_at(p, pts[i]) >= 0; })) return true;
  }
  return false;
}

}  // namespace pfpos
