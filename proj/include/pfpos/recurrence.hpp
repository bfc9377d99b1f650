#pragma once

#include "pfpos/algebraic.hpp"
#include "pfpos/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfpos {

/// p_0(n) f(n) + p_1(n) f(n+1) + ... + p_r(n) f(n+r) = 0
class Recurrence {
 public:
  Recurrence() = default;
  /// Throws std::invalid_argument unless there are at least two
  /// coefficients and the last one is nonzero.
  explicit Recurrence(std::vector<UniPoly> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }
  const UniPoly& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
  const UniPoly& leading() const { return coeffs_.back(); }

  /// p_i(n + s) for every i.
  Recurrence shifted(long s) const;
  /// p_i(n) * c^i, the recurrence of f(n) / c^n.
  Recurrence eigen_scaled(const Rational& c) const;

  std::string to_string() const;
  friend bool operator==(const Recurrence&, const Recurrence&) = default;

 private:
  std::vector<UniPoly> coeffs_;
};

struct SequenceSpec {
  Recurrence rec;
  std::vector<Rational> initial_values;
};

/// The sequence cannot be unrolled past `index` because the leading
/// coefficient vanishes there and no initial value covers it.
class UnderdeterminedError : public std::runtime_error {
 public:
  explicit UnderdeterminedError(long index);
  long index() const { return index_; }

 private:
  long index_;
};

/// Throws std::invalid_argument for too few initial values and
/// UnderdeterminedError when an integer root of p_r blocks unrolling.
void validate_spec(const SequenceSpec& spec);

/// Lazily unrolled sequence with a memoized prefix.
class Sequence {
 public:
  explicit Sequence(SequenceSpec spec);
  const Rational& operator[](long n);
  const SequenceSpec& spec() const { return spec_; }
  /// Number of terms computed so far.
  long known() const { return static_cast<long>(memo_.size()); }

 private:
  SequenceSpec spec_;
  std::vector<Rational> memo_;
};

Rational eval_sequence(const SequenceSpec& spec, long n);

struct ShiftResult {
  SequenceSpec spec;
  std::vector<Rational> prefix;
  long shift = 0;
};

/// g(n) = f(n + u) with u one more than the largest nonnegative integer
/// root of p_r, so that the new leading coefficient has no such roots.
ShiftResult shift_normalize(const SequenceSpec& spec);

/// All integer roots, ascending. p must be nonzero.
std::vector<Integer> integer_roots(const UniPoly& p);

bool is_balanced(const Recurrence& rec);

/// sum_i lc-at-degree-d(p_i) x^i with d = deg p_0. Throws
/// std::invalid_argument for unbalanced recurrences.
UniPoly characteristic_polynomial(const Recurrence& rec);

enum class DominanceKind { RealPositive, NoneRealPositive, NotUnique, UnsupportedOrder };

const char* to_string(DominanceKind k);

/// Characteristic polynomial data after normalizing the dominant eigenvalue
/// to 1: for order 3, (x - 1)(x^2 + u x + v); for order 2, (x - 1)(x - u).
struct CharPolyFactorization {
  UniPoly char_poly;
  DominanceKind kind = DominanceKind::UnsupportedOrder;
  std::optional<RealAlgebraic> dominant;
  std::optional<RealAlgebraic> residual_u;
  std::optional<RealAlgebraic> residual_v;
};

CharPolyFactorization dominance_analysis(const UniPoly& char_poly);

}  // namespace pfpos
