#include "pfpos/recurrence.hpp"

#include "pfpos/image.hpp"
#include "pfpos/roots.hpp"

#include <algorithm>
#include <sstream>

namespace pfpos {

Recurrence::Recurrence(std::vector<UniPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw std::invalid_argument("recurrence needs order >= 1");
  if (coeffs_.back().is_zero()) throw std::invalid_argument("leading coefficient p_r is zero");
}

Recurrence Recurrence::shifted(long s) const {
  std::vector<UniPoly> c;
  for (const auto& p : coeffs_) c.push_back(p.shifted(Rational(s)));
  return Recurrence(std::move(c));
}

Recurrence Recurrence::eigen_scaled(const Rational& c) const {
  std::vector<UniPoly> out;
  Rational f = 1;
  for (const auto& p : coeffs_) {
    out.push_back(p * f);
    f *= c;
  }
  return Recurrence(std::move(out));
}

std::string Recurrence::to_string() const {
  std::ostringstream out;
  for (int i = 0; i <= order(); ++i) {
    if (i) out << " + ";
    out << "(" << coeffs_[static_cast<size_t>(i)].to_string("n") << ")*f(n+" << i << ")";
  }
  out << " = 0";
  return out.str();
}

UnderdeterminedError::UnderdeterminedError(long index)
    : std::runtime_error("underdetermined: f(" + std::to_string(index) +
                         ") is not fixed by the recurrence (leading coefficient vanishes at n = " +
                         std::to_string(index) + " - r) and no initial value covers it"),
      index_(index) {}

void validate_spec(const SequenceSpec& spec) {
  const long r = spec.rec.order();
  const long have = static_cast<long>(spec.initial_values.size());
  if (have < r)
    throw std::invalid_argument("need at least " + std::to_string(r) + " initial values, got " +
                                std::to_string(have));
  for (const Integer& m : integer_roots(spec.rec.leading()))
    if (m >= 0 && m + r >= have) throw UnderdeterminedError(m.get_si() + r);
}

Sequence::Sequence(SequenceSpec spec) : spec_(std::move(spec)) {
  if (static_cast<long>(spec_.initial_values.size()) < spec_.rec.order())
    throw std::invalid_argument("too few initial values");
  memo_ = spec_.initial_values;
}

const Rational& Sequence::operator[](long n) {
  if (n < 0) throw std::out_of_range("negative sequence index");
  const long r = spec_.rec.order();
  const auto& c = spec_.rec.coeffs();
  while (static_cast<long>(memo_.size()) <= n) {
    const long k = static_cast<long>(memo_.size());
    const Rational base(k - r);
    Rational lead = c.back().eval(base);
    if (lead == 0) throw UnderdeterminedError(k);
    Rational acc = 0;
    for (long i = 0; i < r; ++i) acc += c[static_cast<size_t>(i)].eval(base) * memo_[static_cast<size_t>(k - r + i)];
    memo_.push_back(-acc / lead);
  }
  return memo_[static_cast<size_t>(n)];
}

Rational eval_sequence(const SequenceSpec& spec, long n) {
  Sequence s(spec);
  return s[n];
}

ShiftResult shift_normalize(const SequenceSpec& spec) {
  ShiftResult out;
  long max_root = -1;
  for (const Integer& m : integer_roots(spec.rec.leading()))
    if (m >= 0) max_root = std::max(max_root, m.get_si());
  if (max_root < 0) {
    out.spec = spec;
    return out;
  }
  validate_spec(spec);
  const long u = max_root + 1;
  const long r = spec.rec.order();
  Sequence seq(spec);
  const long end = std::max(u + r, static_cast<long>(spec.initial_values.size()));
  for (long k = 0; k < u; ++k) out.prefix.push_back(seq[k]);
  std::vector<Rational> init;
  for (long k = u; k < end; ++k) init.push_back(seq[k]);
  out.spec = SequenceSpec{spec.rec.shifted(u), std::move(init)};
  out.shift = u;
  return out;
}

std::vector<Integer> integer_roots(const UniPoly& p) {
  std::vector<Integer> out;
  for (const auto& root : isolate_real_roots(p))
    if (root.is_rational() && root.rational_value().get_den() == 1) out.push_back(root.rational_value().get_num());
  return out;
}

bool is_balanced(const Recurrence& rec) {
  const int d = rec.coeff(0).degree();
  if (d < 0 || rec.leading().degree() != d) return false;
  for (const auto& p : rec.coeffs())
    if (p.degree() > d) return false;
  return true;
}

UniPoly characteristic_polynomial(const Recurrence& rec) {
  if (!is_balanced(rec))
    throw std::invalid_argument("recurrence is not balanced; eigenvalue classification is unavailable");
  const int d = rec.coeff(0).degree();
  std::vector<Rational> c;
  for (const auto& p : rec.coeffs()) c.push_back(p.coeff(d));
  return UniPoly(std::move(c));
}

const char* to_string(DominanceKind k) {
  switch (k) {
    case DominanceKind::RealPositive: return "real-positive";
    case DominanceKind::NoneRealPositive: return "none-real-positive";
    case DominanceKind::NotUnique: return "not-unique";
    case DominanceKind::UnsupportedOrder: return "unsupported-order";
  }
  return "?";
}

namespace {

// Among the real roots, the one of strictly largest modulus; nullopt when
// two distinct real roots share the largest modulus.
std::optional<RealAlgebraic> largest_modulus(const std::vector<RealAlgebraic>& roots, bool& tie) {
  tie = false;
  std::optional<RealAlgebraic> best;
  RealAlgebraic best_abs;
  for (const auto& r : roots) {
    RealAlgebraic a = abs(r);
    if (!best) {
      best = r;
      best_abs = a;
      continue;
    }
    auto c = alg_compare(a, best_abs);
    if (c > 0) {
      best = r;
      best_abs = a;
      tie = false;
    } else if (c == 0) {
      tie = true;
    }
  }
  return best;
}

}  // namespace

CharPolyFactorization dominance_analysis(const UniPoly& char_poly) {
  CharPolyFactorization out;
  out.char_poly = char_poly;
  const int r = char_poly.degree();
  if (r < 1 || r > 3) {
    out.kind = DominanceKind::UnsupportedOrder;
    return out;
  }
  if (char_poly.coeff(0) == 0) throw std::invalid_argument("characteristic polynomial has root 0");
  const UniPoly m = char_poly.monic();
  const std::vector<RealAlgebraic> roots = isolate_real_roots(squarefree_part(m));

  bool tie = false;
  std::optional<RealAlgebraic> lam = largest_modulus(roots, tie);
  if (!lam) {  // only complex roots (order 2)
    out.kind = DominanceKind::NoneRealPositive;
    return out;
  }
  if (tie) {
    out.kind = DominanceKind::NotUnique;
    return out;
  }
  // A complex pair exists iff the number of real roots counted with
  // multiplicity falls short of the degree.
  int real_mult = 0;
  for (const auto& x : roots) {
    UniPoly d = m;
    while (sign_at(d, x) == 0) {
      ++real_mult;
      d = d.derivative();
    }
  }
  if (real_mult < r) {
    // r = 3 with one real root rho and a pair of modulus^2 t, rho * t = -b0.
    const Rational b0 = m.coeff(0);
    UniPoly cube_plus = UniPoly::monomial(Rational(1), 3) + UniPoly::constant(b0);
    int s = sign_at(cube_plus, *lam) * sign(*lam);  // sign of rho^2 - t
    if (r == 2 || s < 0) {
      out.kind = DominanceKind::NoneRealPositive;
      return out;
    }
    if (s == 0) {
      out.kind = DominanceKind::NotUnique;
      return out;
    }
  }
  if (sign(*lam) <= 0) {
    out.kind = DominanceKind::NoneRealPositive;
    return out;
  }
  out.kind = DominanceKind::RealPositive;
  out.dominant = *lam;
  const UniPoly y = UniPoly::x();
  if (r == 2) {
    // other = -b1 - lambda; u = other / lambda
    out.residual_u = algebraic_image(*lam, UniPoly::constant(-m.coeff(1)) - y, y);
  } else if (r == 3) {
    out.residual_u = algebraic_image(*lam, y + UniPoly::constant(m.coeff(2)), y);
    out.residual_v = algebraic_image(*lam, UniPoly::constant(-m.coeff(0)), UniPoly::monomial(Rational(1), 3));
  }
  return out;
}

}  // namespace pfpos
