#include <doctest.h>

#include "fixtures.hpp"
#include "pfpos/classifier.hpp"
#include "pfpos/prover.hpp"

#include <random>

using namespace pfpos;
using fixtures::P;
using fixtures::Q;

namespace {

struct Sampler {
  std::mt19937 rng;
  explicit Sampler(unsigned seed) : rng(seed) {}
  // Uniform-ish rational in (lo, hi) with denominator up to 997.
  Rational in(const Rational& lo, const Rational& hi) {
    std::uniform_int_distribution<int> d(1, 997);
    const int den = d(rng);
    std::uniform_int_distribution<int> k(1, den - 1 > 0 ? den - 1 : 1);
    return lo + (hi - lo) * make_rational(k(rng), den + 0);
  }
};

RealAlgebraic R(const char* s) { return RealAlgebraic(Q(s)); }

bool mu_region(const Rational& u, const Rational& v) { return region_mu_order3(RealAlgebraic(u), RealAlgebraic(v)); }

}  // namespace

TEST_CASE("classify: order three fixtures") {
  auto rep = classify(fixtures::gk_example());
  CHECK(rep.order == 3);
  CHECK(rep.balanced);
  REQUIRE(rep.u);
  CHECK(rep.u->is_rational());
  CHECK(rep.u->rational_value() == Q("-1/4"));
  CHECK(rep.v->rational_value() == Q("1/8"));
  CHECK(rep.mu == MuPrediction::ProvenTerminatesGeneric);
  CHECK(rep.gk == GKPrediction::ProvenTerminates);
  CHECK(rep.region == GKRegion::Length4);

  auto mu = classify(fixtures::mu_example());
  CHECK(mu.mu == MuPrediction::ProvenTerminatesGeneric);
  CHECK(mu.gk == GKPrediction::Unknown);
  CHECK(mu.region == GKRegion::Outside);
  CHECK(mu.conjecture_no_positive_root == false);
  CHECK(mu.conjecture_clause == false);
  CHECK(mu.probe == ProbeResult::Passed);
  // u = -(t + t^2) = 1 - 5t, v = t^3 with t = 2 - sqrt3
  CHECK(sign_at(P({"1", "-52", "1"}), *mu.v) == 0);
  CHECK(alg_compare(*mu.v, RealAlgebraic(Q("1/50"))) < 0);
  CHECK(sign_at(P({"6", "18", "1"}), *mu.u) == 0);  // u = -9 + 5 sqrt3
  CHECK(alg_compare(*mu.u, RealAlgebraic(Q("-34/100"))) > 0);
  CHECK(alg_compare(*mu.u, RealAlgebraic(Q("-33/100"))) < 0);
}

TEST_CASE("classify: order two and one") {
  auto rem = classify(gen_remark_spec(Q("1/2"), 4));
  CHECK(rem.u->rational_value() == Q("1/2"));
  CHECK(rem.gk == GKPrediction::ProvenNonTerminating);
  CHECK(rem.mu == MuPrediction::ProvenTerminatesGeneric);
  CHECK(rem.probe == ProbeResult::Passed);

  auto ng = classify(fixtures::nongeneric_example());
  CHECK(ng.gk == GKPrediction::ExpectedNonTerminating);
  CHECK(ng.mu == MuPrediction::ProvenTerminatesGeneric);
  CHECK(ng.probe == ProbeResult::Failed);

  SequenceSpec neg_u{Recurrence({P({"-1/2"}), P({"-1/2"}), P({"1"})}), {Q("1"), Q("2")}};
  auto nu = classify(neg_u);
  CHECK(nu.u->rational_value() == Q("-1/2"));
  CHECK(nu.gk == GKPrediction::ProvenTerminates);
  CHECK(nu.gk_iteration_bound == 0L);
  CHECK(prove_gk(neg_u, 50).status == Status::True);

  auto o1 = classify(fixtures::order1_example());
  CHECK(o1.complete_decision);
  CHECK(o1.gk == GKPrediction::Unknown);

  SequenceSpec osc{Recurrence({P({"1"}), P({"0"}), P({"1"})}), {Q("1"), Q("1")}};
  auto os = classify(osc);
  CHECK(os.dominance != DominanceKind::RealPositive);
  CHECK(os.gk == GKPrediction::Unknown);
  CHECK(os.mu == MuPrediction::Unknown);

  SequenceSpec unbal{Recurrence({P({"1"}), P({"0", "1"})}), {Q("1")}};
  CHECK_FALSE(classify(SequenceSpec{Recurrence({P({"1"}), P({"0", "0", "1"}), P({"1"})}), {Q("1"), Q("1")}}).balanced);
  (void)unbal;

  auto j = to_json(classify(fixtures::gk_example()));
  CHECK(j["u"]["rational"] == "-1/4");
  CHECK(j["mu_prediction"]["status"] == "proven-terminates-generic");
  CHECK(j["region"] == "length4");
}

TEST_CASE("genericity probe") {
  auto mu = fixtures::mu_example();
  RealAlgebraic lam(P({"1", "-4", "1"}), Q("3"), Q("4"));  // 2 + sqrt3
  CHECK(genericity_probe(mu, lam, 60, Q("1/10")) == ProbeResult::Passed);
  std::string note;
  CHECK(genericity_probe(fixtures::nongeneric_example(), R("1"), 60, Q("1/10"), &note) == ProbeResult::Failed);
  CHECK(note.find("heuristic") == 0);
  CHECK(genericity_probe(fixtures::constant_example(), R("1"), 60, Q("1/10")) == ProbeResult::Passed);
  SequenceSpec zero{fixtures::constant_example().rec, {Q("0")}};
  CHECK(genericity_probe(zero, R("1"), 60, Q("1/10")) == ProbeResult::Failed);
}

TEST_CASE("order three regions") {
  CHECK(region_mu_order3(R("0"), R("1/5")));
  CHECK_FALSE(region_mu_order3(R("0"), R("1/2")));
  CHECK_FALSE(region_mu_order3(R("1"), R("1/2")));
  CHECK_FALSE(region_mu_order3(R("1"), R("0")));
  CHECK(region_gk_order3(R("1/2"), R("1/4")) == GKRegion::Triangle);
  CHECK(region_gk_order3(R("-1/4"), R("1/8")) == GKRegion::Length4);
  CHECK(region_gk_order3(R("-1"), R("1/5")) == GKRegion::Outside);
  CHECK(conjecture_clause(R("-1"), R("1/5")));
  CHECK_FALSE(no_positive_root(R("-1"), R("1/5")));
  CHECK(region_gk_order3(R("0"), R("1/2")) == GKRegion::Length4);
  CHECK(region_gk_order3(R("-1/2"), R("3/4")) == GKRegion::ConjectureOnly);
  CHECK(region_gk_order3(R("3"), R("1/2")) == GKRegion::Outside);
  // Boundaries are excluded.
  CHECK(region_gk_order3(R("1/2"), R("1/2")) != GKRegion::Triangle);
  CHECK_FALSE(in_eigen_triangle(R("1"), R("0")));

  Sampler s(5);
  int disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    Rational u = s.in(Q("-2"), Q("2")), v = s.in(Q("-1"), Q("1"));
    RealAlgebraic ru(u), rv(v);
    if (!in_eigen_triangle(ru, rv)) {
      CHECK_FALSE(region_mu_order3(ru, rv));
      CHECK(region_gk_order3(ru, rv) == GKRegion::Outside);
      continue;
    }
    if (region_gk_order3(ru, rv) == GKRegion::Triangle) {
      CHECK(u < 1);
      CHECK(v > 0);
      CHECK(1 - u + u * u - v > 0);
      CHECK(u > 0);
    }
    if (conjecture_clause(ru, rv) != no_positive_root(ru, rv)) ++disagreements;
  }
  MESSAGE("conjecture phrasings disagree at " << disagreements << " sampled triangle points");
}

TEST_CASE("order two sets: witnesses and implications") {
  Sampler s(17);
  int points = 0;
  while (points < 500) {
    Rational c1 = s.in(Q("0"), Q("2")), c0 = s.in(Q("-1"), Q("1"));
    if (!d2_contains(c0, c1)) continue;
    ++points;
    auto mu = d3_order2_mu(c0, c1);
    REQUIRE(mu);
    CHECK(d3_order2_contains(c0, c1, *mu));
  }
  points = 0;
  while (points < 500) {
    Rational mu = s.in(Q("0"), Q("1")), c1 = s.in(Q("0"), Q("2")), c0 = s.in(Q("-1"), Q("1"));
    if (!d3_order2_contains(c0, c1, mu)) continue;
    ++points;
    REQUIRE(mu_cone_implication({c0, c1}, mu));
  }
  // (-u, u + 1) lies in D2 for u in (-1, 1).
  for (int k = -9; k <= 9; ++k) CHECK(d2_contains(make_rational(-k, 10), make_rational(k, 10) + 1));
}

TEST_CASE("order three sets: witnesses and implications") {
  Sampler s(23);
  int points = 0;
  while (points < 500) {
    Rational c2 = s.in(Q("0"), Q("2")), c1 = s.in(Q("-1"), Q("3")), c0 = s.in(Q("-2"), Q("2"));
    if (!d3_contains(c0, c1, c2)) continue;
    ++points;
    auto mu = d4_mu(c0, c1, c2);
    REQUIRE(mu);
    CHECK(d4_contains(c0, c1, c2, *mu));
  }
  points = 0;
  while (points < 500) {
    Rational mu = s.in(Q("0"), Q("1")), c2 = s.in(Q("0"), Q("2")), c1 = s.in(Q("-1"), Q("3")), c0 = s.in(Q("-2"), Q("2"));
    if (!d4_contains(c0, c1, c2, mu)) continue;
    ++points;
    REQUIRE(mu_cone_implication({c0, c1, c2}, mu));
  }
  points = 0;
  while (points < 500) {
    Rational u = s.in(Q("-2"), Q("1")), v = s.in(Q("-1"), Q("1"));
    if (!mu_region(u, v)) continue;
    ++points;
    REQUIRE(d3_contains(v, u - v, 1 - u));
    CHECK(cfinite_mu_exists(u, v));
  }
}

TEST_CASE("outside the closure no mu works") {
  Sampler s(29);
  int points = 0;
  while (points < 200) {
    Rational u = s.in(Q("-2"), Q("2")), v = s.in(Q("-1"), Q("1"));
    if (!in_eigen_triangle(RealAlgebraic(u), RealAlgebraic(v))) continue;
    if (u < 1 && 4 * v < (u + 1) * (u + 1)) continue;
    ++points;
    REQUIRE_FALSE(cfinite_mu_exists(u, v));
  }
  // On the boundary 4v = (u+1)^2 the isolated value mu = (1-u)/2 works.
  for (int k = -9; k <= 9; ++k) {
    Rational u = make_rational(k, 10);
    CHECK(cfinite_mu_exists(u, (u + 1) * (u + 1) / 4));
    CHECK(mu_cone_implication({(u + 1) * (u + 1) / 4, u - (u + 1) * (u + 1) / 4, 1 - u}, (1 - u) / 2));
  }
}

TEST_CASE("predictions against prover behavior") {
  for (const auto& spec : {fixtures::mu_example(), gen_remark_spec(Q("1/2"), 4), gen_remark_spec(Q("1/4"), 2)}) {
    auto rep = classify(spec);
    if (rep.mu == MuPrediction::ProvenTerminatesGeneric && rep.probe == ProbeResult::Passed) {
      Verdict v = prove_mu(spec, 50);
      CHECK(v.status != Status::Unknown);
      CHECK(verify_certificate(spec, v));
    }
    if (rep.gk == GKPrediction::ProvenNonTerminating) {
      Verdict g = prove_gk(spec, 50);
      CHECK(g.status != Status::True);
    }
  }
}
