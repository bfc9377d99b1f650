#include <doctest.h>

#include "fixtures.hpp"
#include "pfpos/prover.hpp"

#include <random>

using namespace pfpos;
using fixtures::P;
using fixtures::Q;

namespace {

Recurrence rec_of(std::initializer_list<std::initializer_list<const char*>> cs) {
  std::vector<UniPoly> v;
  for (auto c : cs) v.push_back(P(c));
  return Recurrence(v);
}

void check_sound(const SequenceSpec& spec, const Verdict& v, long horizon = 1000) {
  Sequence s(spec);
  if (v.status == Status::True) {
    for (long k = 0; k <= horizon; ++k) REQUIRE(s[k] >= 0);
  } else if (v.status == Status::False) {
    REQUIRE(v.witness);
    CHECK(s[v.witness->n] == v.witness->value);
    CHECK(v.witness->value < 0);
    for (long k = 0; k < v.witness->n; ++k) CHECK(s[k] >= 0);
  }
}

}  // namespace

TEST_CASE("rewriting rows") {
  auto q = build_gk_rewriting(fixtures::gk_example().rec, 3);
  REQUIRE(q.size() == 4);
  CHECK(q[3][0] == RatFunc(P({"7", "2"}), P({"13", "2"})));
  CHECK(q[3][1] == RatFunc(P({"-20", "-3"}), P({"13", "2"})));
  CHECK(q[3][2] == RatFunc(P({"22", "5"}), P({"13", "2"})));
  CHECK(build_gk_rewriting(fixtures::gk_example().rec, 3).size() == 4);

  auto c = build_gk_rewriting(rec_of({{"1/2"}, {"-3/2"}, {"1"}}), 3);
  CHECK(c[3][0] == RatFunc(P({"-3/4"})));
  CHECK(c[3][1] == RatFunc(P({"7/4"})));

  for (const auto& spec : {fixtures::gk_example(), fixtures::mu_example(), fixtures::nongeneric_example()}) {
    const int r = spec.rec.order();
    auto rows = build_gk_rewriting(spec.rec, 14);
    Sequence s(spec);
    for (long n = 0; n < 10; ++n)
      for (long i = 0; i <= 14; ++i) {
        Rational acc = 0;
        for (int j = 0; j < r; ++j) acc += rows[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(Rational(n)) * s[n + j];
        REQUIRE(acc == s[n + i]);
      }
  }
}

TEST_CASE("depth search") {
  auto spec = fixtures::gk_example();
  Verdict v = prove_gk(spec, 50);
  REQUIRE(v.status == Status::True);
  REQUIRE(v.phi_trace.size() >= 2);
  CHECK(v.phi_trace[0] == std::pair<long, bool>{3, false});
  CHECK(v.phi_trace[1] == std::pair<long, bool>{4, false});
  // The first true induction formula is rho = 6; see the explicit
  // counterexample for rho = 5 in the engine tests.
  auto& cert = std::get<GKCertificate>(v.certificate);
  CHECK(cert.rho == 6);
  CHECK(cert.checked_prefix[3] == Q("9/13"));
  CHECK(cert.checked_prefix[4] == Q("61/195"));
  CHECK(verify_certificate(spec, v));
  check_sound(spec, v);

  Verdict tampered = v;
  std::get<GKCertificate>(tampered.certificate).rho = 4;
  std::get<GKCertificate>(tampered.certificate).checked_prefix.resize(4);
  CHECK_FALSE(verify_certificate(spec, tampered));
  std::get<GKCertificate>(tampered.certificate).rho = 5;
  std::get<GKCertificate>(tampered.certificate).checked_prefix = cert.checked_prefix;
  std::get<GKCertificate>(tampered.certificate).checked_prefix.resize(5);
  CHECK_FALSE(verify_certificate(spec, tampered));

  CHECK(prove_gk(spec, 3).status == Status::Unknown);

  Verdict c = prove_gk(fixtures::constant_example(), 5);
  CHECK(c.status == Status::True);
  CHECK(std::get<GKCertificate>(c.certificate).rho == 1);

  Verdict neg = prove_gk(SequenceSpec{spec.rec, {Q("1"), Q("-1"), Q("1")}}, 5);
  CHECK(neg.status == Status::False);
  CHECK(neg.witness->n == 1);
}

TEST_CASE("counterexample family") {
  SequenceSpec s1 = gen_remark_spec(Q("1/2"), 1);
  CHECK(s1.initial_values == std::vector<Rational>{Q("0"), Q("-1/2")});
  SequenceSpec s3 = gen_remark_spec(Q("1/2"), 3);
  CHECK(s3.initial_values == std::vector<Rational>{Q("3"), Q("1")});
  CHECK(eval_sequence(s3, 2) == 0);
  CHECK(eval_sequence(s3, 3) == Q("-1/2"));
  CHECK(gen_remark_spec(Q("2/3"), 1).initial_values[0] == 0);
  CHECK_THROWS_AS(gen_remark_spec(Q("1"), 2), std::invalid_argument);
  CHECK_THROWS_AS(gen_remark_spec(Q("1/2"), 0), std::invalid_argument);

  for (const char* u : {"1/2", "1/3", "3/4"})
    for (long n0 : {1L, 2L, 4L, 7L}) {
      SequenceSpec s = gen_remark_spec(Q(u), n0);
      for (long k = 0; k < n0 + 5; ++k) CHECK((eval_sequence(s, k) >= 0) == (k < n0));
      Verdict g = prove_gk(s, 50);
      CHECK(g.status == Status::False);
      CHECK(g.witness->n == n0);
      for (const auto& [rho, ok] : g.phi_trace) CHECK_FALSE(ok);
      Verdict m = prove_mu(s, 50);
      CHECK(m.status == Status::False);
      CHECK(m.witness->n == n0);
      CHECK(verify_certificate(s, g));
    }
}

TEST_CASE("scaled monotonicity search") {
  auto spec = fixtures::mu_example();
  Verdict v = prove_mu(spec, 50);
  REQUIRE(v.status == Status::True);
  auto& cert = std::get<MuCertificate>(v.certificate);
  CHECK(cert.n == 3);
  CHECK(verify_certificate(spec, v));
  check_sound(spec, v);
  // mu = 2 is admissible as well.
  Verdict two = v;
  std::get<MuCertificate>(two.certificate).mu = RealAlgebraic(Rational(2));
  CHECK(verify_certificate(spec, two));
  Verdict bad = v;
  std::get<MuCertificate>(bad.certificate).mu = RealAlgebraic(Rational(3));  // 17/80 >= 3/10 fails
  CHECK_FALSE(verify_certificate(spec, bad));
  bad = v;
  std::get<MuCertificate>(bad.certificate).mu = RealAlgebraic(Q("13/10"));  // below (5 - sqrt5)/2
  CHECK_FALSE(verify_certificate(spec, bad));
  bad = v;
  std::get<MuCertificate>(bad.certificate).n = 2;
  std::get<MuCertificate>(bad.certificate).checked_prefix.pop_back();
  CHECK_FALSE(verify_certificate(spec, bad));

  Verdict ng = prove_mu(fixtures::nongeneric_example(), 30);
  CHECK(ng.status == Status::Unknown);
  CHECK(ng.iterations_used == 30);

  Verdict neg = prove_mu(SequenceSpec{spec.rec, {Q("-1"), Q("1"), Q("1")}}, 5);
  CHECK(neg.status == Status::False);
  CHECK(neg.witness->n == 0);
  CHECK(neg.witness->value == -1);

  // Unreachable before n = 102: the k = 1 condition has negative
  // discriminant x^2 - 96x - 556 below x = 101.5.
  CHECK(prove_mu(fixtures::gk_example(), 50).status == Status::Unknown);
  Verdict late = prove_mu(fixtures::gk_example(), 200);
  REQUIRE(late.status == Status::True);
  CHECK(std::get<MuCertificate>(late.certificate).n == 102);
  CHECK(verify_certificate(fixtures::gk_example(), late));
}

TEST_CASE("order one") {
  auto spec = fixtures::order1_example();
  Verdict v = order1_decide(spec);
  REQUIRE(v.status == Status::True);
  auto& cert = std::get<Order1Certificate>(v.certificate);
  CHECK(cert.bound == 5);
  CHECK(cert.checked_prefix.size() == 7);
  CHECK(verify_certificate(spec, v));
  check_sound(spec, v);

  Verdict alt = order1_decide(SequenceSpec{rec_of({{"1"}, {"1"}}), {Q("1")}});
  CHECK(alt.status == Status::False);
  CHECK(alt.witness->n == 1);

  SequenceSpec tenth{rec_of({{"-10", "1"}, {"-1", "-1"}}), {Q("1")}};
  Verdict t = order1_decide(tenth);
  CHECK(t.status == Status::False);
  CHECK(t.witness->n == 1);
  CHECK(t.witness->value == -10);

  Verdict tampered = v;
  std::get<Order1Certificate>(tampered.certificate).bound = 4;
  std::get<Order1Certificate>(tampered.certificate).checked_prefix.pop_back();
  CHECK_FALSE(verify_certificate(spec, tampered));
}

TEST_CASE("order one: agreement of the deciders with brute force") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-9, 9);
  int gk_concluded = 0;
  for (int t = 0; t < 120; ++t) {
    UniPoly p0({Rational(c(rng)), Rational(c(rng))});
    UniPoly p1({Rational(c(rng)), Rational(c(rng))});
    if (p1.is_zero()) continue;
    SequenceSpec spec{Recurrence({p0, p1}), {Rational(1 + (t % 3))}};
    try {
      validate_spec(spec);
    } catch (const UnderdeterminedError&) {
      continue;
    }
    Verdict d = order1_decide(spec);
    Sequence s(spec);
    long first_negative = -1;
    for (long k = 0; k <= 300 && first_negative < 0; ++k)
      if (s[k] < 0) first_negative = k;
    if (first_negative >= 0) {
      REQUIRE(d.status == Status::False);
      CHECK(d.witness->n == first_negative);
    } else {
      REQUIRE(d.status == Status::True);
    }
    CHECK(verify_certificate(spec, d));
    Verdict g = prove_gk(spec, 30);
    if (g.status != Status::Unknown) {
      ++gk_concluded;
      CHECK(g.status == d.status);
    }
  }
  CHECK(gk_concluded > 60);
}

TEST_CASE("scale invariance and determinism") {
  const Rational c = Q("3/7");
  auto scaled = [&](SequenceSpec s) {
    for (auto& v : s.initial_values) v *= c;
    return s;
  };
  auto g = fixtures::gk_example();
  Verdict a = prove_gk(g, 20), b = prove_gk(scaled(g), 20);
  CHECK(a.status == b.status);
  CHECK(std::get<GKCertificate>(a.certificate).rho == std::get<GKCertificate>(b.certificate).rho);
  auto m = fixtures::mu_example();
  Verdict ma = prove_mu(m, 20), mb = prove_mu(scaled(m), 20);
  CHECK(ma.status == mb.status);
  CHECK(std::get<MuCertificate>(ma.certificate).n == std::get<MuCertificate>(mb.certificate).n);
  CHECK(to_json(prove_gk(g, 20)).dump() == to_json(a).dump());
  CHECK(to_json(prove_mu(m, 20)).dump() == to_json(ma).dump());
}

TEST_CASE("json") {
  auto j = to_json(prove_mu(fixtures::mu_example(), 10));
  CHECK(j["status"] == "True");
  CHECK(j["certificate"]["kind"] == "mu");
  CHECK(j["certificate"]["n"] == 3);
  CHECK(j["witness"].is_null());
  auto w = to_json(prove_gk(gen_remark_spec(Q("1/2"), 2), 10));
  CHECK(w["witness"]["n"] == 2);
  CHECK(w["witness"]["value"] == "-1/2");
  RealAlgebraic s2(P({"-2", "0", "1"}), Q("1"), Q("2"));
  auto a = to_json(s2);
  CHECK(a["polynomial"].size() == 3);
  CHECK(a["interval"][0] == "1");
}

TEST_CASE("automatic dispatch") {
  Verdict a = prove_auto(fixtures::gk_example(), 50);
  CHECK(a.status == Status::True);
  CHECK(a.engine == "gk");
  CHECK(verify_certificate(fixtures::gk_example(), a));

  Verdict o = prove_auto(fixtures::order1_example(), 50);
  CHECK(o.status == Status::True);
  CHECK(o.engine == "order1");

  SequenceSpec r = gen_remark_spec(Q("1/2"), 6);
  Verdict f = prove_auto(r, 50);
  CHECK(f.status == Status::False);
  CHECK(f.witness->n == 6);
  CHECK(f.engine == "mu");

  Verdict m = prove_auto(fixtures::mu_example(), 50);
  CHECK(m.status == Status::True);
  CHECK(m.engine == "mu");
  CHECK(m.note.find("classifier") == 0);

  Verdict n = prove_auto(fixtures::nongeneric_example(), 20);
  CHECK(n.status == Status::Unknown);
  CHECK(n.iterations_used == 20);
}
