#include "pfpos/poly2.hpp"

#include "pfpos/algebraic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pfpos {

Poly2::Poly2(std::vector<UniPoly> x_coeffs) : c_(std::move(x_coeffs)) { trim(); }

Poly2::Poly2(const Rational& c) {
  if (c != 0) c_.push_back(UniPoly::constant(c));
}

Poly2 Poly2::from_x(const UniPoly& p) {
  std::vector<UniPoly> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(UniPoly::constant(c));
  return Poly2(std::move(v));
}

Poly2 Poly2::from_mu(const UniPoly& p) { return Poly2(std::vector<UniPoly>{p}); }

void Poly2::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly2::degree_mu() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

bool Poly2::mu_free() const {
  for (const auto& c : c_)
    if (c.degree() > 0) return false;
  return true;
}

Rational Poly2::constant_value() const {
  if (!is_constant()) throw std::logic_error("Poly2: not a constant");
  return c_.empty() ? Rational(0) : c_[0].coeff(0);
}

const UniPoly& Poly2::x_coeff(int i) const {
  static const UniPoly zero;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(i)];
}

UniPoly Poly2::to_x() const {
  if (!mu_free()) throw std::logic_error("Poly2: polynomial depends on mu");
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.coeff(0));
  return UniPoly(std::move(v));
}

UniPoly Poly2::eval_mu(const Rational& mu) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.eval(mu));
  return UniPoly(std::move(v));
}

UniPoly Poly2::eval_x(const Rational& x) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Rational Poly2::eval(const Rational& x, const Rational& mu) const { return eval_mu(mu).eval(x); }

Poly2 Poly2::derivative_x() const {
  if (c_.size() <= 1) return {};
  std::vector<UniPoly> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly2(std::move(v));
}

Poly2 Poly2::shifted_x(const Rational& s) const {
  if (s == 0 || c_.size() <= 1) return *this;
  // Horner: acc = acc * (x + s) + c_i
  Poly2 step = Poly2::from_x(UniPoly({s, Rational(1)}));
  Poly2 acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * step + Poly2::from_mu(*it);
  return acc;
}

Poly2 Poly2::transposed() const {
  const int dm = degree_mu();
  if (dm < 0) return {};
  std::vector<std::vector<Rational>> t(static_cast<size_t>(dm + 1), std::vector<Rational>(c_.size()));
  for (size_t i = 0; i < c_.size(); ++i)
    for (int j = 0; j <= c_[i].degree(); ++j) t[static_cast<size_t>(j)][i] = c_[i].coeff(j);
  std::vector<UniPoly> v;
  v.reserve(t.size());
  for (auto& row : t) v.emplace_back(std::move(row));
  return Poly2(std::move(v));
}

Poly2 Poly2::primitive() const {
  if (c_.empty()) return {};
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& p : c_)
    for (const auto& c : p.coeffs()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
  Rational scale = make_rational(den_lcm, num_gcd);
  if (scale == 1) return *this;
  return *this * scale;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly2(std::move(v));
}

Poly2 operator*(const Poly2& a, const Rational& s) {
  if (s == 0) return {};
  Poly2 r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

bool operator<(const Poly2& a, const Poly2& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] < b.c_[i]) return true;
    if (b.c_[i] < a.c_[i]) return false;
  }
  return false;
}

std::string Poly2::to_string(const std::string& xvar, const std::string& muvar) const {
  if (c_.empty()) return "0";
  if (mu_free()) return to_x().to_string(xvar);
  std::ostringstream out;
  bool first = true;
  for (int i = degree_x(); i >= 0; --i) {
    const UniPoly& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string(muvar) << ")";
    if (i > 0) out << "*" << xvar;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

UniPoly determinant(std::vector<std::vector<UniPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return UniPoly::constant(1);
  bool negate = false;
  UniPoly prev = UniPoly::constant(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        UniPoly v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.degree() == 0 ? v * Rational(1 / prev.lc()) : exact_div(v, prev);
      }
      m[i][k] = UniPoly{};
    }
    prev = m[k][k];
  }
  UniPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

namespace {

// Sylvester-type matrix for the j-th subresultant whose last column holds
// the coefficients of x^last_exp (last_exp = j gives psc_j).
std::vector<std::vector<UniPoly>> subresultant_matrix(const Poly2& p, const Poly2& q, int j, int last_exp) {
  const int dp = p.degree_x(), dq = q.degree_x();
  const int size = dp + dq - 2 * j;
  const int top = dp + dq - j - 1;  // exponent of the first column
  std::vector<std::vector<UniPoly>> m;
  m.reserve(static_cast<size_t>(size));
  auto add_rows = [&](const Poly2& f, int deg_f, int count) {
    for (int s = count - 1; s >= 0; --s) {
      std::vector<UniPoly> row(static_cast<size_t>(size));
      for (int col = 0; col < size; ++col) {
        int e = (col == size - 1 ? last_exp : top - col) - s;
        if (e >= 0 && e <= deg_f) row[static_cast<size_t>(col)] = f.x_coeff(e);
      }
      m.push_back(std::move(row));
    }
  };
  add_rows(p, dp, dq - j);
  add_rows(q, dq, dp - j);
  return m;
}

}  // namespace

std::vector<UniPoly> principal_subresultants(const Poly2& p, const Poly2& q) {
  const int dp = p.degree_x(), dq = q.degree_x();
  if (dp < 1 || dq < 1) throw std::invalid_argument("principal_subresultants: need positive x-degree");
  std::vector<UniPoly> out;
  for (int j = 0; j < std::min(dp, dq); ++j) out.push_back(determinant(subresultant_matrix(p, q, j, j)));
  return out;
}

Poly2 subresultant(const Poly2& p, const Poly2& q, int j) {
  const int dp = p.degree_x(), dq = q.degree_x();
  if (j < 0 || j >= std::min(dp, dq)) throw std::invalid_argument("subresultant: index out of range");
  std::vector<UniPoly> c;
  for (int i = 0; i <= j; ++i) c.push_back(determinant(subresultant_matrix(p, q, j, i)));
  return Poly2(std::move(c));
}

std::pair<Rational, Rational> interval_eval2(const Poly2& p, const Rational& xl, const Rational& xh,
                                             const Rational& ml, const Rational& mh) {
  Rational lo = 0, hi = 0;
  for (int i = p.degree_x(); i >= 0; --i) {
    // [lo, hi] * [xl, xh]
    Rational c[4] = {lo * xl, lo * xh, hi * xl, hi * xh};
    lo = *std::min_element(c, c + 4);
    hi = *std::max_element(c, c + 4);
    auto [cl, ch] = interval_eval(p.x_coeff(i), ml, mh);
    lo += cl;
    hi += ch;
  }
  return {lo, hi};
}

UniPoly resultant_x(const Poly2& p, const Poly2& q) {
  if (p.is_zero() || q.is_zero()) return {};
  auto power = [](const UniPoly& c, int k) {
    UniPoly r = UniPoly::constant(1);
    for (int i = 0; i < k; ++i) r *= c;
    return r;
  };
  if (p.degree_x() == 0) return power(p.x_coeff(0), q.degree_x());
  if (q.degree_x() == 0) return power(q.x_coeff(0), p.degree_x());
  return principal_subresultants(p, q).front();
}

}  // namespace pfpos
