#include "pfpos/classifier.hpp"
#include "pfpos/prover.hpp"
#include "pfpos/qe.hpp"
#include "pfpos/region.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace pfpos;

namespace {

// Tolerances and budgets.
const Rational kCoverageTarget(9635, 10000);
const Rational kCoverageTol(2, 100);
constexpr double kBudget1 = 10, kBudget2 = 30, kBudget3 = 10, kBudget6 = 120, kBudget7 = 600, kBudget8 = 120;

Rational Q(const char* s) { return parse_rational(s); }
UniPoly P(std::initializer_list<const char*> c) {
  std::vector<Rational> v;
  for (const char* s : c) v.push_back(parse_rational(s));
  return UniPoly(std::move(v));
}

SequenceSpec gk_spec() {
  return {Recurrence({P({"-7", "-2"}), P({"20", "3"}), P({"-22", "-5"}), P({"13", "2"})}), {1, 1, 1}};
}
SequenceSpec mu_spec() {
  return {Recurrence({P({"-2", "-1"}), P({"12", "5"}), P({"-13", "-5"}), P({"3", "1"})}), {1, Q("1/4"), Q("1/10")}};
}
SequenceSpec nongeneric_spec() {
  return {Recurrence({P({"2", "5/2", "1/2"}), P({"-11", "-17/2", "-3/2"}), P({"9", "6", "1"})}), {1, Q("1/4")}};
}
SequenceSpec order1_spec() { return {Recurrence({P({"-16", "3"}), P({"17", "-3"})}), {1}}; }

struct Result {
  bool pass;
  std::string detail;
};

struct Sampler {
  std::mt19937 rng;
  explicit Sampler(unsigned seed) : rng(seed) {}
  Rational in(const Rational& lo, const Rational& hi) {
    std::uniform_int_distribution<int> d(2, 997);
    const int den = d(rng);
    std::uniform_int_distribution<int> k(1, den - 1);
    return lo + (hi - lo) * make_rational(k(rng), den);
  }
};

std::string str(const Rational& q) { return q.get_str(); }

Result gk_reproduction() {
  const SequenceSpec s = gk_spec();
  Verdict v = prove_gk(s, 50);
  std::ostringstream d;
  bool ok = v.status == Status::True;
  long rho = 0;
  if (const auto* c = std::get_if<GKCertificate>(&v.certificate)) rho = c->rho;
  std::map<long, bool> trace(v.phi_trace.begin(), v.phi_trace.end());
  auto phi = [&](long r) { return trace.count(r) ? (trace[r] ? "true" : "false") : "n/a"; };
  ok = ok && rho == 5 && trace.count(3) && !trace[3] && trace.count(4) && !trace[4] && trace.count(5) && trace[5];
  Rational f3 = eval_sequence(s, 3), f4 = eval_sequence(s, 4);
  ok = ok && f3 == Q("9/13") && f4 == Q("61/195");
  d << "status " << to_string(v.status) << ", rho " << rho << " (expected 5), phi(3) " << phi(3) << ", phi(4) " << phi(4)
    << ", phi(5) " << phi(5) << ", phi(6) " << phi(6) << ", f(3) " << str(f3) << ", f(4) " << str(f4);
  return {ok, d.str()};
}

Result mu_reproduction() {
  const SequenceSpec s = mu_spec();
  Verdict v = prove_mu(s, 50);
  std::ostringstream d;
  const auto* c = std::get_if<MuCertificate>(&v.certificate);
  bool ok = v.status == Status::True && c && c->n == 3 && verify_certificate(s, v);
  if (c) {
    RealAlgebraic mu = c->mu;
    // 17/80 >= mu/10 and 247/400 >= 17 mu/80
    ok = ok && alg_compare(mu, RealAlgebraic(Q("17/8"))) <= 0 && alg_compare(mu, RealAlgebraic(Q("247/85"))) <= 0;
    d << "n " << c->n << ", mu " << mu.to_string();
  }
  Verdict inj = v;
  if (c) {
    auto cert = *c;
    cert.mu = RealAlgebraic(Rational(2));
    inj.certificate = cert;
  }
  bool two = c && verify_certificate(s, inj);
  d << ", mu = 2 accepted: " << (two ? "yes" : "no");
  MuDecider dec(s.rec);
  bool none_before = true;
  for (long n = 0; n < 3; ++n) {
    std::vector<RatioConstraint> cons;
    for (long j = 0; j + 1 < s.rec.order(); ++j) cons.push_back({eval_sequence(s, n + 1 + j), eval_sequence(s, n + j)});
    if (dec.find_mu(n, cons)) none_before = false;
  }
  d << ", no witness at n = 0..2: " << (none_before ? "yes" : "no");
  return {ok && two && none_before, d.str()};
}

Result order1_completeness() {
  const SequenceSpec ex = order1_spec();
  Verdict v = order1_decide(ex);
  const auto* c = std::get_if<Order1Certificate>(&v.certificate);
  bool ok = v.status == Status::True && c && static_cast<long>(c->checked_prefix.size()) == c->bound + 2 &&
            verify_certificate(ex, v);
  std::ostringstream d;
  if (c) d << "example: bound " << c->bound << ", checked 0.." << c->bound + 1;

  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> deg(0, 2), h(-9, 9);
  auto rand_poly = [&] {
    std::vector<Rational> cs;
    int dg = deg(rng);
    for (int i = 0; i <= dg; ++i) cs.emplace_back(h(rng));
    if (cs.back() == 0) cs.back() = 1 + static_cast<int>(rng() % 9);
    return UniPoly(std::move(cs));
  };
  int specs = 0, neg = 0, disagree = 0;
  while (specs < 100) {
    SequenceSpec s{Recurrence({rand_poly(), rand_poly()}), {Rational(h(rng))}};
    try {
      validate_spec(s);
    } catch (const std::exception&) {
      continue;
    }
    ++specs;
    Sequence seq(s);
    std::optional<long> first_neg;
    for (long n = 0; n < 60 && !first_neg; ++n)
      if (seq[n] < 0) first_neg = n;
    Verdict r = order1_decide(s);
    if (first_neg) {
      ++neg;
      if (r.status != Status::False || !r.witness || r.witness->n != *first_neg) ++disagree;
    } else if (r.status == Status::False) {
      if (!r.witness || r.witness->n < 60 || eval_sequence(s, r.witness->n) >= 0) ++disagree;
    } else if (r.status != Status::True) {
      ++disagree;
    }
  }
  d << "; random: " << specs << " specs, " << neg << " with a negative term in 60, " << disagree << " disagreements";
  return {ok && disagree == 0, d.str()};
}

Result counterexample_family() {
  int bad = 0, runs = 0;
  for (const char* u : {"1/4", "1/2", "3/4"})
    for (long n0 : {1, 3, 6, 10}) {
      ++runs;
      SequenceSpec s = gen_remark_spec(Q(u), n0);
      Sequence seq(s);
      bool exact = seq[n0] < 0;
      for (long k = 0; k < n0; ++k) exact = exact && seq[k] >= 0;
      Verdict v = prove_gk(s, 50);
      if (!exact || v.status != Status::False || !v.witness || v.witness->n != n0) ++bad;
    }
  return {bad == 0, std::to_string(runs) + " (u, n0) pairs, " + std::to_string(bad) + " failures"};
}

Result nongeneric_unknown() {
  const SequenceSpec s = nongeneric_spec();
  Verdict v = prove_mu(s, 30);
  std::string note;
  ProbeResult p = genericity_probe(s, RealAlgebraic(Rational(1)), 60, Rational(1, 10), &note);
  Sequence seq(s);
  Rational ratio = seq[200] / seq[199];
  bool ok = v.status == Status::Unknown && p == ProbeResult::Failed && abs(ratio - Rational(1, 2)) < Rational(1, 100);
  return {ok, std::string("status ") + to_string(v.status) + ", probe " + to_string(p) + ", f(200)/f(199) ~ " +
                  std::to_string(ratio.get_d())};
}

Result set_suites() {
  Sampler s(23);
  int counter = 0;
  int points = 0;
  while (points < 500) {
    Rational c1 = s.in(0, 2), c0 = s.in(-1, 1);
    if (!d2_contains(c0, c1)) continue;
    ++points;
    auto mu = d3_order2_mu(c0, c1);
    if (!mu || !d3_order2_contains(c0, c1, *mu) || !mu_cone_implication({c0, c1}, *mu)) ++counter;
  }
  points = 0;
  while (points < 500) {
    Rational c2 = s.in(0, 2), c1 = s.in(-1, 3), c0 = s.in(-2, 2);
    if (!d3_contains(c0, c1, c2)) continue;
    ++points;
    auto mu = d4_mu(c0, c1, c2);
    if (!mu || !d4_contains(c0, c1, c2, *mu) || !mu_cone_implication({c0, c1, c2}, *mu)) ++counter;
  }
  points = 0;
  while (points < 500) {
    Rational u = s.in(-2, 1), v = s.in(-1, 1);
    if (!region_mu_order3(u, v)) continue;
    ++points;
    if (!d3_contains(v, u - v, 1 - u) || !cfinite_mu_exists(u, v)) ++counter;
  }
  int sharp = 0;
  points = 0;
  while (points < 200) {
    Rational u = s.in(-2, 2), v = s.in(-1, 1);
    if (!in_triangle(u, v)) continue;
    if (u <= 1 && 4 * v <= (u + 1) * (u + 1)) continue;  // closure of the mu region
    ++points;
    if (cfinite_mu_exists(u, v)) ++sharp;
  }
  return {counter == 0 && sharp == 0, "3 x 500 membership points: " + std::to_string(counter) +
                                          " counterexamples; 200 points outside the closure: " + std::to_string(sharp) +
                                          " with a feasible mu"};
}

Result region_map(const std::string& findings_path) {
  auto rows = map_region(Rational(1, 100), 10);
  RegionFindings f = summarize(rows);
  Rational cov = coverage_fraction(Rational(1, 100));
  bool ok = f.triangle_mismatch.empty() && abs(cov - kCoverageTarget) <= kCoverageTol;
  if (!findings_path.empty()) {
    std::ofstream out(findings_path);
    nlohmann::json j = to_json(f);
    j["coverage"] = cov.get_str();
    out << j.dump(2) << '\n';
  }
  std::ostringstream d;
  d << rows.size() << " points, triangle mismatches " << f.triangle_mismatch.size() << ", coverage " << cov.get_d()
    << "; findings: " << f.outside_with_rho.size() << " outside points with a rho, " << f.conjecture_without_rho.size()
    << " conjecture-only points without one";
  return {ok, d.str()};
}

Poly2 random_poly(std::mt19937& rng, int deg, int height) {
  std::uniform_int_distribution<int> c(-height, height);
  std::vector<Rational> v;
  for (int i = 0; i <= deg; ++i) v.emplace_back(c(rng));
  return Poly2::from_x(UniPoly(std::move(v)));
}

Result qe_agreement() {
  std::mt19937 rng(777);
  std::vector<LinearConeFormula> all;
  for (long rho = 3; rho <= 6; ++rho) all.push_back(gk_formula(gk_spec().rec, rho));
  for (long rho = 3; rho <= 5; ++rho) all.push_back(gk_formula(mu_spec().rec, rho));
  for (long rho = 2; rho <= 5; ++rho) all.push_back(gk_formula(nongeneric_spec().rec, rho));
  for (long n0 : {1, 3})
    for (long rho = 3; rho <= 5; ++rho) all.push_back(gk_formula(gen_remark_spec(Q("1/2"), n0).rec, rho));
  const size_t fixtures = all.size();
  std::uniform_int_distribution<int> dims(1, 3), nh(1, 4), deg(0, 2);
  for (int t = 0; t < 200; ++t) {
    LinearConeFormula f;
    int dim = dims(rng);
    auto rand_form = [&] {
      LinearForm lf;
      for (int j = 0; j < dim; ++j) lf.coeffs.push_back(random_poly(rng, deg(rng), 5));
      return lf;
    };
    int h = nh(rng);
    for (int i = 0; i < h; ++i) f.hypotheses.push_back(rand_form());
    f.conclusion = rand_form();
    f.x_domain = rng() % 2 ? Domain::at_least(Rational(0)) : Domain::real_line();
    all.push_back(std::move(f));
  }
  std::uniform_int_distribution<int> num(-400, 400), den(1, 37);
  int disagree = 0, probes = 0;
  for (const auto& f : all) {
    const bool decided = decide_cone_formula(f);
    const Formula ce = cone_counterexamples(f);
    int taken = 0;
    while (taken < 25) {
      Rational x = make_rational(num(rng), den(rng));
      if (!f.x_domain.contains(x)) continue;
      ++taken;
      if (std::any_of(f.excluded.begin(), f.excluded.end(),
                      [&](const RealAlgebraic& p) { return alg_compare(p, RealAlgebraic(x)) == 0; }))
        continue;
      ++probes;
      const bool fk = farkas_decide_at(f, x);
      if (fk == ce.eval(x, 0) || (decided && !fk)) ++disagree;
    }
  }
  return {disagree == 0, std::to_string(fixtures) + " fixture + 200 random formulas, " + std::to_string(probes) +
                             " probes, " + std::to_string(disagree) + " disagreements"};
}

Result invariants() {
  std::vector<SequenceSpec> fx = {gk_spec(), mu_spec(), nongeneric_spec(), order1_spec(), gen_remark_spec(Q("1/2"), 6),
                                  gen_remark_spec(Q("3/4"), 3)};
  int residual = 0, scale = 0, eigen = 0, cert = 0, concluding = 0;
  for (const auto& s : fx) {
    Sequence seq(s);
    const int r = s.rec.order();
    for (long n = 0; n <= 200; ++n) {
      Rational acc = 0;
      for (int i = 0; i <= r; ++i) acc += s.rec.coeff(i).eval(Rational(n)) * seq[n + i];
      if (acc != 0) ++residual;
    }
    Verdict v = prove_auto(s, 30);
    SequenceSpec scaled = s;
    for (auto& x : scaled.initial_values) x *= Q("7/3");
    std::vector<UniPoly> cs = s.rec.coeffs();
    for (auto& p : cs) p *= Q("-5/2");
    scaled.rec = Recurrence(cs);
    Verdict w = prove_auto(scaled, 30);
    if (w.status != v.status || (v.witness && (!w.witness || w.witness->n != v.witness->n))) ++scale;
    if (v.status == Status::True) {
      ++concluding;
      if (!verify_certificate(s, v) || !verify_certificate(scaled, w)) ++cert;
    } else if (v.status == Status::False) {
      ++concluding;
      if (!v.witness || eval_sequence(s, v.witness->n) != v.witness->value || v.witness->value >= 0) ++cert;
    }
  }
  std::vector<SequenceSpec> order3 = {gk_spec(), mu_spec(),
                                      {Recurrence({P({"-1/4"}), P({"-1/4"}), P({"-1/2"}), P({"1"})}), {1, 1, 1}}};
  for (const auto& s : order3) {
    ClassifierReport a = classify(s);
    for (const char* c : {"3/2", "1/3", "5"}) {
      Rational k = Q(c);
      SequenceSpec t{s.rec.eigen_scaled(k), {}};
      for (size_t i = 0; i < s.initial_values.size(); ++i) t.initial_values.push_back(s.initial_values[i] / pow(k, static_cast<long>(i)));
      ClassifierReport b = classify(t);
      if (!a.u || !b.u || alg_compare(*a.u, *b.u) != 0 || alg_compare(*a.v, *b.v) != 0 || a.gk != b.gk || a.mu != b.mu ||
          a.probe != b.probe) ++eigen;
    }
  }
  std::ostringstream d;
  d << "residual failures " << residual << ", scale mismatches " << scale << ", eigen-scaling mismatches " << eigen
    << ", certificate failures " << cert << " over " << concluding << " concluding fixtures";
  return {residual + scale + eigen + cert == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> known_red;
  std::set<int> only;
  std::string findings;
  app.add_option("--known-red", known_red, "criteria whose failure is recorded and tolerated in the exit status");
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--findings", findings, "write the region-map findings report (JSON) here");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "order-3 depth-search reproduction", kBudget1, gk_reproduction},
      {2, "scaled-monotonicity reproduction", kBudget2, mu_reproduction},
      {3, "order-1 completeness", kBudget3, order1_completeness},
      {4, "counterexample family", 0, counterexample_family},
      {5, "non-generic Unknown", 0, nongeneric_unknown},
      {6, "termination set suites", kBudget6, set_suites},
      {7, "region map and coverage", kBudget7, [&] { return region_map(findings); }},
      {8, "QE oracle agreement", kBudget8, qe_agreement},
      {9, "invariant suites", 0, invariants},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = c.budget == 0 || secs < c.budget;
    bool pass = r.pass && in_time;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs << " s";
    if (c.budget > 0) time << " of " << c.budget << " s";
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << ": " << r.detail << " [" << time.str()
              << "]" << std::endl;
    if (!pass && std::find(known_red.begin(), known_red.end(), c.id) == known_red.end()) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
