#include "pfpos/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pfpos {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::x() { return UniPoly({Rational(0), Rational(1)}); }

UniPoly UniPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<size_t>(k) + 1);
  v[static_cast<size_t>(k)] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
  UniPoly p = constant(1);
  for (const auto& r : roots) p *= UniPoly({Rational(-r), Rational(1)});
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

const Rational& UniPoly::lc() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::shifted(const Rational& shift) const {
  if (shift == 0 || is_constant()) return *this;
  // Horner in the polynomial ring: ((c_n)(x+s) + c_{n-1})(x+s) + ...
  std::vector<Rational> r(c_.size());
  int n = degree();
  for (int i = n; i >= 0; --i) {
    // r := r * (x + s) + c_i, r currently has degree n - i - 1
    for (int j = n - i; j >= 1; --j) {
      r[static_cast<size_t>(j)] = r[static_cast<size_t>(j - 1)] + r[static_cast<size_t>(j)] * shift;
    }
    r[0] = r[0] * shift + c_[static_cast<size_t>(i)];
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rational& scale) const {
  std::vector<Rational> r(c_);
  Rational f = 1;
  for (auto& c : r) {
    c *= f;
    f *= scale;
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::primitive() const {
  if (c_.empty()) return {};
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& c : c_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale == 1) return *this;
  return *this * scale;
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  return *this * Rational(1 / lc());
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

bool operator<(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a.c_[static_cast<size_t>(i)], b.c_[static_cast<size_t>(i)]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) out << mag.get_str();
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem(a.coeffs());
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  Rational inv_lc = 1 / b.lc();
  int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    Rational q = rem[static_cast<size_t>(k)] * inv_lc;
    if (q == 0) continue;
    quo[static_cast<size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k - db + j)] -= q * bc[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a.primitive(), v = b.primitive();
  while (!v.is_zero()) {
    UniPoly r = divmod(u, v).second.primitive();
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (p.degree() <= 0) return UniPoly::constant(1);
  UniPoly g = gcd(p, p.derivative());
  UniPoly s = g.degree() > 0 ? exact_div(p, g) : p;
  s = s.primitive();
  if (s.lc() < 0) s = -s;
  return s;
}

Rational root_bound(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  Rational m = 0;
  const Rational& l = p.lc();
  for (int i = 0; i < p.degree(); ++i) {
    Rational q = abs(p.coeff(i) / l);
    if (q > m) m = q;
  }
  return m + 1;
}

}  // namespace pfpos
