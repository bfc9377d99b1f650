#include <doctest.h>

#include "pfpos/poly2.hpp"
#include "pfpos/ratfunc.hpp"

#include <random>

using namespace pfpos;

namespace {

UniPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

// Sylvester determinant over Q by plain Gaussian elimination.
Rational oracle_resultant(const UniPoly& a, const UniPoly& b) {
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + m - k] = a.coeff(k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + n - k] = b.coeff(k);
  Rational det = 1;
  for (int c = 0; c < size; ++c) {
    int piv = c;
    while (piv < size && s[piv][c] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != c) {
      std::swap(s[piv], s[c]);
      det = -det;
    }
    det *= s[c][c];
    for (int r = c + 1; r < size; ++r) {
      Rational f = s[r][c] / s[c][c];
      for (int k = c; k < size; ++k) s[r][k] -= f * s[c][k];
    }
  }
  return det;
}

Poly2 random_poly2(std::mt19937& rng, int dx, int dmu) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<UniPoly> xs;
  for (int i = 0; i <= dx; ++i) {
    std::vector<Rational> c;
    for (int j = 0; j <= dmu; ++j) c.emplace_back(coef(rng));
    xs.emplace_back(std::move(c));
  }
  return Poly2(std::move(xs));
}

}  // namespace

TEST_CASE("ratfunc reduction and arithmetic") {
  RatFunc r(P({-1, 0, 1}), P({2, 2}));  // (x^2-1)/(2x+2) = (x-1)/2
  CHECK(r.denom() == P({1}));
  CHECK(r.numer() == UniPoly({Rational(-1, 2), Rational(1, 2)}));
  RatFunc a(P({1}), P({0, 1}));
  RatFunc b(P({1}), P({1, 1}));
  RatFunc d = a - b;  // 1/(x(x+1))
  CHECK(d.numer() == P({1}));
  CHECK(d.denom() == P({0, 1, 1}));
  CHECK((d * RatFunc(P({0, 1}))) == b);
  CHECK((a / b).eval(Rational(2)) == Rational(3, 2));
  CHECK(a.shifted(Rational(1)) == b);
  CHECK_THROWS(a.eval(Rational(0)));
  CHECK_THROWS(RatFunc(P({1}), UniPoly()));
  CHECK_THROWS(a / RatFunc());
}

TEST_CASE("poly2 basics") {
  Poly2 x = Poly2::x(), mu = Poly2::mu();
  Poly2 p = x * x - mu * Rational(3) + Poly2(Rational(1));
  CHECK(p.degree_x() == 2);
  CHECK(p.degree_mu() == 1);
  CHECK_FALSE(p.mu_free());
  CHECK(p.eval(Rational(2), Rational(1)) == 2);
  CHECK(p.eval_mu(Rational(1)) == P({-2, 0, 1}));
  CHECK(p.eval_x(Rational(2)) == P({5, -3}));
  CHECK(p.derivative_x() == x * Rational(2));
  CHECK(p.shifted_x(Rational(1)).eval(Rational(1), Rational(5)) == p.eval(Rational(2), Rational(5)));
  CHECK((p - p).is_zero());
  CHECK((x * Rational(4) + mu * Rational(6)).primitive() == x * Rational(2) + mu * Rational(3));
  CHECK((x * Rational(1, 2)).primitive() == x);
  CHECK(Poly2(Rational(7)).constant_value() == 7);
  CHECK_THROWS(p.to_x());
  CHECK(p.to_string() == "(1)*x^2 + (-3*mu + 1)");
}

TEST_CASE("resultant and subresultants, fixed examples") {
  Poly2 x = Poly2::x(), mu = Poly2::mu();
  UniPoly r = resultant_x(x * x - mu, x - Poly2(Rational(1)));
  CHECK(r == P({1, -1}));
  // x^2 - 2 mu x + 1 with its x-derivative: discriminant-type resultant.
  Poly2 f = x * x - mu * x * Rational(2) + Poly2(Rational(1));
  auto psc = principal_subresultants(f, f.derivative_x());
  REQUIRE(psc.size() == 1);
  CHECK(psc[0] == P({4, 0, -4}));  // -(4 mu^2 - 4)
  // Common quadratic factor at mu = 0 -> psc_0 = psc_1 = 0 there, psc_2 not defined.
  Poly2 g = (x * x + Poly2(Rational(1))) * (x - mu);
  Poly2 h = (x * x + Poly2(Rational(1))) * (x + mu + Poly2(Rational(1)));
  auto ps = principal_subresultants(g, h);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0].is_zero());
  CHECK(ps[1].is_zero());
  CHECK_FALSE(ps[2].is_zero());
  CHECK(resultant_x(Poly2(Rational(3)), x * x) == P({9}));
}

TEST_CASE("resultant property: specialisation commutes with elimination") {
  std::mt19937 rng(20261015);
  for (int t = 0; t < 60; ++t) {
    int da = 1 + static_cast<int>(rng() % 3), db = 1 + static_cast<int>(rng() % 3);
    Poly2 a = random_poly2(rng, da, 2), b = random_poly2(rng, db, 2);
    if (a.degree_x() < 1 || b.degree_x() < 1) continue;
    auto psc = principal_subresultants(a, b);
    for (long m = -3; m <= 3; ++m) {
      Rational mu(m);
      UniPoly ua = a.eval_mu(mu), ub = b.eval_mu(mu);
      if (ua.degree() != a.degree_x() || ub.degree() != b.degree_x()) continue;
      CHECK(psc[0].eval(mu) == oracle_resultant(ua, ub));
      // Degree of the gcd equals the index of the first nonzero psc.
      int first = 0;
      while (first < static_cast<int>(psc.size()) && psc[first].eval(mu) == 0) ++first;
      int g = gcd(ua, ub).degree();
      if (first < static_cast<int>(psc.size())) CHECK(first == g);
      else CHECK(g >= first);
    }
  }
}
