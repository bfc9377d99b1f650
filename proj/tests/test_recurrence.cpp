#include <doctest.h>

#include "fixtures.hpp"
#include "pfpos/image.hpp"
#include "pfpos/recurrence.hpp"

#include <algorithm>

using namespace pfpos;
using fixtures::P;
using fixtures::Q;

namespace {

std::vector<SequenceSpec> all_fixtures() {
  return {fixtures::gk_example(), fixtures::mu_example(), fixtures::nongeneric_example(), fixtures::order1_example(),
          fixtures::constant_example()};
}

}  // namespace

TEST_CASE("sequence values") {
  CHECK(eval_sequence(fixtures::gk_example(), 3) == Q("9/13"));
  CHECK(eval_sequence(fixtures::gk_example(), 4) == Q("61/195"));
  CHECK(eval_sequence(fixtures::mu_example(), 4) == Q("17/80"));
  CHECK(eval_sequence(fixtures::mu_example(), 5) == Q("247/400"));
  CHECK(eval_sequence(fixtures::constant_example(), 37) == 1);
  Sequence s(fixtures::nongeneric_example());
  for (long n = 0; n <= 60; ++n) CHECK(s[n] == pow(Rational(2), -n) / (n + 1));
  CHECK(s.known() == 61);
}

TEST_CASE("recurrence residual vanishes") {
  for (const auto& spec : all_fixtures()) {
    Sequence s(spec);
    const int r = spec.rec.order();
    for (long n = 0; n <= 200; ++n) {
      Rational acc = 0;
      for (int i = 0; i <= r; ++i) acc += spec.rec.coeff(i).eval(Rational(n)) * s[n + i];
      REQUIRE(acc == 0);
    }
  }
}

TEST_CASE("underdetermined sequences") {
  // p_1 = n - 2 blocks f(3) unless supplied.
  Recurrence rec({P({"1"}), P({"-2", "1"})});
  SequenceSpec short_spec{rec, {Q("1"), Q("1"), Q("1")}};
  try {
    eval_sequence(short_spec, 5);
    FAIL("expected an underdetermined error");
  } catch (const UnderdeterminedError& e) {
    CHECK(e.index() == 3);
  }
  CHECK_THROWS_AS(validate_spec(short_spec), UnderdeterminedError);
  CHECK_THROWS_AS(validate_spec(SequenceSpec{fixtures::gk_example().rec, {Q("1")}}), std::invalid_argument);
  CHECK_THROWS(Recurrence({P({"1"})}));
  CHECK_THROWS(Recurrence({P({"1"}), UniPoly()}));
}

TEST_CASE("shift normalization") {
  auto r41 = shift_normalize(fixtures::order1_example());
  CHECK(r41.shift == 0);
  CHECK(r41.prefix.empty());
  CHECK(r41.spec.rec == fixtures::order1_example().rec);
  CHECK(shift_normalize(fixtures::constant_example()).shift == 0);

  Recurrence rec({P({"1"}), P({"-2", "1"})});
  SequenceSpec spec{rec, {Q("1"), Q("1"), Q("1"), Q("1")}};
  auto res = shift_normalize(spec);
  CHECK(res.shift == 3);
  REQUIRE(res.prefix.size() == 3);
  CHECK(res.prefix == std::vector<Rational>{1, 1, 1});
  for (const auto& root : integer_roots(res.spec.rec.leading())) CHECK(root < 0);
  Sequence orig(spec), moved(res.spec);
  for (long k = 0; k < 30; ++k) CHECK(moved[k] == orig[k + 3]);

  // Nongeneric example: (n+3)^2 has only negative roots.
  CHECK(shift_normalize(fixtures::nongeneric_example()).shift == 0);
}

TEST_CASE("integer roots") {
  CHECK(integer_roots(P({"-17", "3"})).empty());
  CHECK(integer_roots(P({"-2", "1"})) == std::vector<Integer>{2});
  UniPoly p = P({"-2", "1"}) * P({"5", "1"}) * P({"-1", "2"});
  CHECK(integer_roots(p) == std::vector<Integer>{-5, 2});
  CHECK(integer_roots(P({"0", "0", "1"})) == std::vector<Integer>{0});
  CHECK(integer_roots(P({"1", "0", "1"})).empty());
}

TEST_CASE("balance and characteristic polynomial") {
  CHECK(is_balanced(fixtures::gk_example().rec));
  CHECK(is_balanced(fixtures::nongeneric_example().rec));
  CHECK_FALSE(is_balanced(Recurrence({P({"1"}), P({"0", "1"})})));
  CHECK(characteristic_polynomial(fixtures::gk_example().rec) == P({"-2", "3", "-5", "2"}));
  CHECK(characteristic_polynomial(fixtures::mu_example().rec) == P({"-1", "5", "-5", "1"}));
  Recurrence family({P({"1/2"}), P({"-3/2"}), P({"1"})});
  CHECK(characteristic_polynomial(family) == P({"1/2", "-3/2", "1"}));
  CHECK_THROWS_AS(characteristic_polynomial(Recurrence({P({"1"}), P({"0", "1"})})), std::invalid_argument);
  for (const auto& spec : all_fixtures())
    if (is_balanced(spec.rec)) CHECK(characteristic_polynomial(spec.rec).coeff(0) != 0);
}

TEST_CASE("dominance analysis") {
  auto a = dominance_analysis(P({"-2", "3", "-5", "2"}));
  REQUIRE(a.kind == DominanceKind::RealPositive);
  CHECK(a.dominant->rational_value() == 2);
  CHECK(a.residual_u->rational_value() == Q("-1/4"));
  CHECK(a.residual_v->rational_value() == Q("1/8"));

  auto b = dominance_analysis(P({"-1", "5", "-5", "1"}));
  REQUIRE(b.kind == DominanceKind::RealPositive);
  RealAlgebraic lam(P({"1", "-4", "1"}), Q("3"), Q("4"));  // 2 + sqrt 3
  CHECK(alg_compare(*b.dominant, lam) == 0);
  // u = -9 + 5 sqrt3 is a root of u^2 + 18u + 6; v = (2 - sqrt3)^3 = 26 - 15 sqrt3 is a root of v^2 - 52v + 1.
  CHECK(alg_compare(*b.residual_u, RealAlgebraic(P({"6", "18", "1"}), Q("-1"), Q("0"))) == 0);
  CHECK(alg_compare(*b.residual_v, RealAlgebraic(P({"1", "-52", "1"}), Q("0"), Q("1"))) == 0);

  CHECK(dominance_analysis(P({"1", "0", "1"})).kind == DominanceKind::NoneRealPositive);
  auto c = dominance_analysis(P({"1/2", "-3/2", "1"}));
  REQUIRE(c.kind == DominanceKind::RealPositive);
  CHECK(c.residual_u->rational_value() == Q("1/2"));
  CHECK(dominance_analysis(P({"-1", "0", "1"})).kind == DominanceKind::NotUnique);       // +-1
  CHECK(dominance_analysis(P({"-2", "-1", "1"})).kind == DominanceKind::RealPositive);   // 2, -1
  CHECK(dominance_analysis(P({"-2", "1", "1"})).kind == DominanceKind::NoneRealPositive); // -2, 1
  // x^3 - 8: pair of modulus 2 equals the real root 2.
  CHECK(dominance_analysis(P({"-8", "0", "0", "1"})).kind == DominanceKind::NotUnique);
  // (x - 1)(x^2 + 4): complex pair of modulus 2 dominates.
  CHECK(dominance_analysis(P({"-4", "4", "-1", "1"})).kind == DominanceKind::NoneRealPositive);
  // (x - 1)^2 (x - 1/2): double dominant root.
  auto d = dominance_analysis(P({"-1/2", "2", "-5/2", "1"}));
  REQUIRE(d.kind == DominanceKind::RealPositive);
  CHECK(d.residual_u->rational_value() == Q("-3/2"));
  CHECK(d.residual_v->rational_value() == Q("1/2"));
  CHECK(dominance_analysis(P({"1", "0", "0", "0", "1"})).kind == DominanceKind::UnsupportedOrder);
}

TEST_CASE("eigenvalue scaling leaves (u, v) unchanged") {
  for (const auto& spec : {fixtures::gk_example(), fixtures::mu_example()}) {
    auto base = dominance_analysis(characteristic_polynomial(spec.rec));
    for (const char* c : {"2", "1/3", "5/7"}) {
      Recurrence scaled = spec.rec.eigen_scaled(Q(c));
      auto s = dominance_analysis(characteristic_polynomial(scaled));
      REQUIRE(s.kind == DominanceKind::RealPositive);
      CHECK(alg_compare(*s.residual_u, *base.residual_u) == 0);
      CHECK(alg_compare(*s.residual_v, *base.residual_v) == 0);
      CHECK(alg_compare(*s.dominant, algebraic_image(*base.dominant, UniPoly::x(), UniPoly::constant(Q(c)))) == 0);
    }
  }
}
