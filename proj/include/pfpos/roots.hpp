#pragma once

#include "pfpos/algebraic.hpp"

#include <optional>
#include <vector>

namespace pfpos {

/// Interval of the real line; an absent endpoint is infinite.
struct Domain {
  std::optional<Rational> lo, hi;
  bool lo_open = false;
  bool hi_open = false;

  static Domain real_line() { return {}; }
  static Domain at_least(Rational q) { return {std::move(q), std::nullopt, false, false}; }
  static Domain greater_than(Rational q) { return {std::move(q), std::nullopt, true, false}; }
  static Domain closed(Rational a, Rational b) { return {std::move(a), std::move(b), false, false}; }

  bool contains(const Rational& q) const;
  bool contains(const RealAlgebraic& a) const;
};

/// Sturm sequence of a square-free polynomial.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);
  /// Number of distinct real roots in (a, b]; absent endpoints are infinite.
  int count(const std::optional<Rational>& a, const std::optional<Rational>& b) const;

 private:
  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;
  std::vector<UniPoly> chain_;
};

/// All distinct real roots of p in the domain, ascending, with pairwise
/// disjoint isolating intervals. With detect_rational, every rational root
/// is returned as a degenerate interval. Throws std::domain_error for p = 0.
std::vector<RealAlgebraic> isolate_real_roots(const UniPoly& p, const Domain& domain = Domain::real_line(),
                                              bool detect_rational = true);

/// Number of distinct real roots in the domain via Sturm counting (used as
/// an independent cross-check of isolation).
int count_real_roots(const UniPoly& p, const Domain& domain = Domain::real_line());

}  // namespace pfpos
