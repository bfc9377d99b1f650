#include <doctest.h>

#include "pfpos/algebraic.hpp"
#include "pfpos/roots.hpp"

#include <random>

using namespace pfpos;

namespace {

UniPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

Rational Q(const char* s) { return parse_rational(s); }

RealAlgebraic sqrt2() { return RealAlgebraic(P({-2, 0, 1}), Rational(1), Rational(2)); }

// (5 - sqrt 5)/2 is the smaller root of x^2 - 5x + 5.
RealAlgebraic five_minus_sqrt5_half() { return RealAlgebraic(P({5, -5, 1}), Rational(1), Rational(2)); }

// Independent root counter for the property test: Sturm sequence built with
// plain euclidean remainders on the raw (non-square-free-reduced) input,
// counting via sign variations at +-(1 + max |a_i/a_n|).
int oracle_distinct_real_roots(const UniPoly& p) {
  std::vector<std::vector<Rational>> seq;
  auto rem = [](std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      a.pop_back();
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
  };
  std::vector<Rational> a = p.coeffs(), b = p.derivative().coeffs();
  seq.push_back(a);
  while (!b.empty()) {
    seq.push_back(b);
    auto r = rem(a, b);
    for (auto& c : r) c = -c;
    a = b;
    b = r;
  }
  // Dividing through by the last element (the gcd) leaves a sequence whose
  // variation count is unaffected; distinct roots are counted directly.
  Rational bound = 0;
  for (size_t i = 0; i + 1 < p.coeffs().size(); ++i) bound = std::max(bound, Rational(abs(p.coeffs()[i] / p.lc())));
  bound += 1;
  auto variations = [&](const Rational& x) {
    int ch = 0, last = 0;
    for (auto& s : seq) {
      Rational v = 0;
      for (auto it = s.rbegin(); it != s.rend(); ++it) v = v * x + *it;
      int sg = sgn(v);
      if (sg == 0) continue;
      if (last && sg != last) ++ch;
      last = sg;
    }
    return ch;
  };
  return variations(-bound) - variations(bound);
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Q("6/4") == Rational(3, 2));
  CHECK(Q(" -7 ") == Rational(-7));
  CHECK(to_string(Q("0/5")) == "0");
  CHECK_THROWS_AS(Q("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Q("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Q("1/-2"), std::invalid_argument);
  CHECK(simplest_between(Q("1382/1000"), Q("2125/1000")) == 2);
  CHECK(simplest_between(Q("1/3"), Q("1/2")) == Q("2/5"));
  CHECK(simplest_between(Q("-1/2"), Q("-1/3")) == Q("-2/5"));
  CHECK(simplest_between(Q("-1"), Q("1")) == 0);
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(P({1, -2, 1})) == P({-1, 1}));
  CHECK(squarefree_part(P({-2, 0, 1})) == P({-2, 0, 1}));
  UniPoly x2m2 = P({-2, 0, 1});
  UniPoly input = x2m2 * x2m2 * P({3, 1});
  UniPoly s = squarefree_part(input);
  CHECK(s == x2m2 * P({3, 1}));
  CHECK(divmod(input, s).second.is_zero());
  CHECK(gcd(s, s.derivative()).degree() == 0);
  CHECK_THROWS_AS(squarefree_part(UniPoly{}), std::domain_error);
}

TEST_CASE("isolate_real_roots examples") {
  auto r = isolate_real_roots(P({-2, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(alg_compare(r[0], RealAlgebraic(Q("-3/2"))) > 0);
  CHECK(alg_compare(r[0], RealAlgebraic(Q("-1"))) < 0);
  CHECK(alg_compare(r[1], RealAlgebraic(Q("1"))) > 0);
  CHECK(alg_compare(r[1], RealAlgebraic(Q("3/2"))) < 0);
  CHECK(r[0].hi() < r[1].lo());

  CHECK(isolate_real_roots(P({1, 0, 1})).empty());

  // 2x^3 - 5x^2 + 3x - 2 on (0, inf): the single root 2
  auto c = isolate_real_roots(P({-2, 3, -5, 2}), Domain::greater_than(0));
  REQUIRE(c.size() == 1);
  REQUIRE(c[0].is_rational());
  CHECK(c[0].rational_value() == 2);
  CHECK(P({-2, 3, -5, 2}).eval(2) == 0);
}

TEST_CASE("isolate_real_roots respects domain endpoints") {
  UniPoly p = UniPoly::from_roots({Rational(0), Rational(1), Rational(3)});
  CHECK(isolate_real_roots(p, Domain::at_least(0)).size() == 3);
  CHECK(isolate_real_roots(p, Domain::greater_than(0)).size() == 2);
  Domain d{Rational(0), Rational(3), false, true};
  CHECK(isolate_real_roots(p, d).size() == 2);
  CHECK(count_real_roots(p, d) == 2);
}

TEST_CASE("sign_at") {
  UniPoly x2m2 = P({-2, 0, 1});
  CHECK(sign_at(x2m2, Q("3/2")) == 1);
  CHECK(sign_at(x2m2, sqrt2()) == 0);
  CHECK(sign_at(P({-1, 1}), five_minus_sqrt5_half()) == 1);
  CHECK(sign_at(P({-2, 1}), five_minus_sqrt5_half()) == -1);
  // (x^2-2)(x-5) vanishes at sqrt2 through a non-minimal defining polynomial
  RealAlgebraic s2(x2m2 * P({-5, 1}), Rational(1), Rational(2));
  CHECK(sign_at(x2m2, s2) == 0);
}

TEST_CASE("alg_compare") {
  CHECK(alg_compare(sqrt2(), RealAlgebraic(Q("3/2"))) < 0);
  RealAlgebraic other(P({-2, 0, 1}) * P({-7, 0, 1}), Q("13/10"), Q("3/2"));
  CHECK(alg_compare(sqrt2(), other) == 0);
  // 2 + sqrt3 is the larger root of x^2 - 4x + 1
  RealAlgebraic two_plus_sqrt3(P({1, -4, 1}), Rational(3), Rational(4));
  CHECK(alg_compare(two_plus_sqrt3, RealAlgebraic(Rational(1))) > 0);
  // a rational root hidden in a reducible defining polynomial
  RealAlgebraic one(P({-1, 1}) * P({-2, 0, 1}), Q("1/2"), Q("6/5"));
  CHECK(alg_compare(one, RealAlgebraic(Rational(1))) == 0);
  CHECK(alg_compare(sqrt2().negated(), RealAlgebraic(Q("-7/5"))) < 0);
}

TEST_CASE("refine") {
  RealAlgebraic r = sqrt2().refined(Q("1/100"));
  CHECK(r.hi() - r.lo() <= Q("1/100"));
  CHECK(r.lo() >= Q("141/100"));
  CHECK(r.hi() <= Q("142/100"));
  RealAlgebraic q = RealAlgebraic(Q("3/7")).refined(Q("1/100"));
  CHECK(q.is_rational());
  CHECK(q.rational_value() == Q("3/7"));
  RealAlgebraic m = five_minus_sqrt5_half().refined(Q("1/1000"));
  CHECK(m.lo() >= Q("1381/1000"));
  CHECK(m.hi() <= Q("1383/1000"));
  CHECK_THROWS_AS(sqrt2().refined(0), std::invalid_argument);
}

TEST_CASE("invalid isolating intervals are rejected") {
  CHECK_THROWS_AS(RealAlgebraic(P({-2, 0, 1}), Rational(-2), Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(RealAlgebraic(P({-2, 0, 1}), Rational(2), Rational(3)), std::invalid_argument);
}

TEST_CASE("property: isolation count matches an independent Sturm count") {
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> coef(-10, 10), deg(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    UniPoly p(c);
    auto roots = isolate_real_roots(p);
    CHECK(static_cast<int>(roots.size()) == oracle_distinct_real_roots(p));
    for (size_t i = 0; i < roots.size(); ++i) {
      CHECK(sign_at(p, roots[i]) == 0);
      CHECK(sign_at(p, roots[i].lo()) * sign_at(p, roots[i].hi()) <= 0);
      if (i + 1 < roots.size()) CHECK(alg_compare(roots[i], roots[i + 1]) < 0);
      // refining never changes comparisons against rational probes
      RealAlgebraic fine = roots[i].refined(Rational(1, 1000));
      for (int k = -6; k <= 6; ++k) {
        RealAlgebraic probe(make_rational(k, 2));
        CHECK(alg_compare(roots[i], probe) == alg_compare(fine, probe));
      }
    }
  }
}

TEST_CASE("property: ring laws on random polynomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9), deg(0, 5);
  auto rnd = [&] {
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& x : c) x = make_rational(coef(rng), 1 + std::abs(coef(rng)));
    return UniPoly(c);
  };
  for (int t = 0; t < 200; ++t) {
    UniPoly a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    if (!a.is_zero() || !b.is_zero()) {
      UniPoly g = gcd(a, b);
      if (!a.is_zero()) CHECK(divmod(a, g).second.is_zero());
      if (!b.is_zero()) CHECK(divmod(b, g).second.is_zero());
    }
    if (!b.is_zero()) {
      auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
    CHECK(a.shifted(Rational(3, 2)).eval(Rational(1, 3)) == a.eval(Rational(11, 6)));
  }
}
