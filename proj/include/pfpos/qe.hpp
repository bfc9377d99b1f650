#pragma once

#include "pfpos/poly2.hpp"
#include "pfpos/ratfunc.hpp"
#include "pfpos/recurrence.hpp"
#include "pfpos/roots.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pfpos {

enum class Rel { Ge, Gt, Eq, Ne };

const char* to_string(Rel rel);

/// sum_j a[j] * y_j + b  REL  0, with coefficients polynomial in x and mu.
/// Missing trailing entries of `a` are zero.
struct Row {
  std::vector<Poly2> a;
  Poly2 b;
  Rel rel = Rel::Ge;

  static Row atom(Poly2 p, Rel rel) { return {{}, std::move(p), rel}; }
  const Poly2& coeff(int j) const;
  bool y_free() const;
  Row negated() const;
  friend bool operator==(const Row&, const Row&) = default;
  friend bool operator<(const Row& l, const Row& r);
};

/// Quantifier-free formula in disjunctive normal form; atoms are Rows.
class Formula {
 public:
  using Conjunct = std::vector<Row>;

  static Formula truth(bool value);
  static Formula atom(Row row);
  static Formula conjunction(Conjunct rows);
  static Formula from_conjuncts(std::vector<Conjunct> cs);

  bool is_false() const { return conjuncts_.empty(); }
  bool is_true() const;
  const std::vector<Conjunct>& conjuncts() const { return conjuncts_; }
  size_t size() const { return conjuncts_.size(); }

  Formula negated() const;
  friend Formula operator&&(const Formula& l, const Formula& r);
  friend Formula operator||(const Formula& l, const Formula& r);

  /// Requires every atom to be y-free unless y values are given.
  bool eval(const Rational& x, const Rational& mu, const std::vector<Rational>& y = {}) const;
  /// Distinct atom polynomials of a y-free formula, normalized up to a
  /// positive constant.
  std::set<Poly2> atom_polys() const;

  /// (or (and (>= P 0) ...) ...) with P written as an infix sum over y0,
  /// y1, ..., x and mu.
  std::string to_sexpr() const;

 private:
  std::vector<Conjunct> conjuncts_;
};

/// Decides the sign of mu-free polynomials over an x-domain; all other
/// polynomials are treated as unknown unless constant.
class SignOracle {
 public:
  static constexpr int kUnknown = 2;
  explicit SignOracle(Domain domain = Domain::real_line()) : domain_(std::move(domain)) {}
  /// +1 or -1 when the sign is constant on the domain, 0 for the zero
  /// polynomial, kUnknown otherwise.
  int sign_on_domain(const Poly2& p);
  const Domain& domain() const { return domain_; }

 private:
  Domain domain_;
  std::map<UniPoly, int> cache_;
};

/// Exists y_var: f, by linear virtual substitution. Every atom must be of
/// degree at most 1 in y_var (guaranteed by the Row representation).
Formula eliminate_linear_var(const Formula& f, int var, SignOracle* oracle = nullptr);

/// Sample points covering every sign-invariant cell of the given
/// polynomials over domain minus excluded points: every root not excluded
/// plus one rational point per open cell.
std::vector<RealAlgebraic> cell_samples(const std::vector<UniPoly>& polys, const Domain& domain,
                                        const std::vector<RealAlgebraic>& excluded);

/// Truth of: for all x in domain minus excluded, f(x). f must mention only x.
bool decide_univariate(const Formula& f, const Domain& domain, const std::vector<RealAlgebraic>& excluded = {});
/// Truth of a y-free formula given the sign of each atom polynomial.
bool eval_signs(const Formula& f, const std::function<int(const Poly2&)>& sign_of);

/// Truth of f at an exact point; f must mention only x.
bool eval_at(const Formula& f, const RealAlgebraic& x);

/// Linear form sum_j coeffs[j] * y_j + constant.
struct LinearForm {
  std::vector<Poly2> coeffs;
  Poly2 constant;

  bool homogeneous() const { return constant.is_zero(); }
  std::vector<Rational> eval(const Rational& x, const Rational& mu) const;
};

/// For all y and all x in x_domain minus excluded: (all hypotheses >= 0)
/// implies conclusion >= 0.
struct LinearConeFormula {
  std::vector<LinearForm> hypotheses;
  LinearForm conclusion;
  Domain x_domain = Domain::real_line();
  std::vector<RealAlgebraic> excluded;

  int dimension() const;
  std::string to_string() const;
};

struct ClearedRows {
  std::vector<LinearForm> forms;
  /// Poles inside the domain.
  std::vector<RealAlgebraic> excluded;
};

/// Multiplies each rational-function row by the square of its common
/// denominator. Throws std::domain_error when a pole in the domain is an
/// integer.
ClearedRows clear_denominators(const std::vector<std::vector<RatFunc>>& rows, const Domain& domain);

/// Exists y, x-free part: hypotheses >= 0 and conclusion < 0, with all y
/// eliminated. A formula in x (and mu) whose solutions in the domain are
/// exactly the counterexamples of F. Elimination runs from the last y down
/// to y_0.
Formula cone_counterexamples(const LinearConeFormula& f);

bool decide_cone_formula(const LinearConeFormula& f);

/// Whether target = sum_i lambda_i gens[i] for some lambda >= 0 (exact
/// simplex, Bland's rule).
bool cone_contains(const std::vector<std::vector<Rational>>& gens, const std::vector<Rational>& target);

/// The cone implication of F at x = x0 (and mu = mu0), decided by Farkas'
/// lemma. Requires homogeneous forms.
bool farkas_decide_at(const LinearConeFormula& f, const Rational& x0, const Rational& mu0 = 0);

/// Exact sign of p at (x, mu).
int sign_at2(const Poly2& p, const RealAlgebraic& x, const RealAlgebraic& mu);

/// a >= mu * b
struct RatioConstraint {
  Rational a, b;
};

/// Satisfiability of the scaled-monotonicity induction step: for which
/// mu >= 0 does
///   for all y, all x >= xi: y_0 >= 0, y_k >= mu y_{k-1} (k < r)
///       implies -sum_j p_j(x)/p_r(x) y_j >= mu y_{r-1}
/// hold. The counterexample formula and the mu-projection are computed once
/// per recurrence.
class MuDecider {
 public:
  explicit MuDecider(Recurrence rec);

  /// The cone formula with symbolic mu over x >= xi.
  LinearConeFormula universal_formula(long xi) const;
  /// Counterexample formula in (x, mu).
  const Formula& counterexamples() const { return counterexamples_; }

  bool universal_holds(long xi, const RealAlgebraic& mu);
  /// A mu >= 0 satisfying the universal part at xi and every constraint;
  /// rational witnesses are preferred.
  std::optional<RealAlgebraic> find_mu(long xi, const std::vector<RatioConstraint>& constraints);

  /// Sorted boundary points in mu (all >= 0) that delimit regions of
  /// constant truth of the universal part at xi.
  std::vector<RealAlgebraic> critical_mu(long xi);

 private:
  std::vector<RealAlgebraic> poles_from(long xi) const;
  const std::vector<UniPoly>& static_projection();

  Recurrence rec_;
  Formula counterexamples_;
  std::vector<Poly2> atom_polys_;
  std::optional<std::vector<UniPoly>> projection_;
};

std::optional<RealAlgebraic> decide_mu_exists(const Recurrence& rec, long n,
                                              const std::vector<RatioConstraint>& constraints);

}  // namespace pfpos
