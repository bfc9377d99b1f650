#pragma once

#include "pfpos/recurrence.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pfpos {

enum class GKPrediction { ProvenTerminates, ConjecturedTerminates, ProvenNonTerminating, ExpectedNonTerminating, Unknown };
enum class MuPrediction { ProvenTerminatesGeneric, ProvenNonTerminating, Unknown };
enum class ProbeResult { Passed, Failed, Skipped };
enum class GKRegion { Triangle, Length4, ConjectureOnly, Outside };

const char* to_string(GKPrediction p);
const char* to_string(MuPrediction p);
const char* to_string(ProbeResult p);
const char* to_string(GKRegion r);

struct ClassifierReport {
  int order = 0;
  bool balanced = false;
  /// Order 1: the complete decider applies and predictions are moot.
  bool complete_decision = false;
  std::optional<UniPoly> char_poly;
  DominanceKind dominance = DominanceKind::UnsupportedOrder;
  std::optional<RealAlgebraic> dominant, u, v;
  GKPrediction gk = GKPrediction::Unknown;
  std::string gk_reason;
  MuPrediction mu = MuPrediction::Unknown;
  std::string mu_reason;
  std::optional<GKRegion> region;
  /// Order 3: the two phrasings of the conjecture, evaluated separately.
  std::optional<bool> conjecture_clause, conjecture_no_positive_root;
  /// Order 2, depth search: first index past which both coefficient ratios
  /// stay positive (informational).
  std::optional<long> gk_iteration_bound;
  ProbeResult probe = ProbeResult::Skipped;
  std::string probe_note;
  std::vector<std::string> notes;
};

ClassifierReport classify(const SequenceSpec& spec, long probe_terms = 60, const Rational& probe_tol = Rational(1, 10));

nlohmann::json to_json(const ClassifierReport& r);

/// |u| - 1 < v < 1: both roots of x^2 + u x + v strictly inside the unit disc.
bool in_eigen_triangle(const RealAlgebraic& u, const RealAlgebraic& v);
/// |u| - 1 < v < 1, 4v < (u+1)^2, u < 1.
bool region_mu_order3(const RealAlgebraic& u, const RealAlgebraic& v);
/// First proven region, else conjecture membership (no positive root of
/// x^2 + u x + v), else Outside.
GKRegion region_gk_order3(const RealAlgebraic& u, const RealAlgebraic& v);
/// (u > 1 and v > 0) or 4v > (u+1)^2, as printed.
bool conjecture_clause(const RealAlgebraic& u, const RealAlgebraic& v);
/// x^2 + u x + v has no root in [0, inf).
bool no_positive_root(const RealAlgebraic& u, const RealAlgebraic& v);

/// Heuristic: ratios f(n+1)/f(n) for the last quarter of n in [N/2, N]
/// (zeros skipped) all lie within relative tolerance tol of lambda > 0,
/// 0 < tol < 1.
ProbeResult genericity_probe(const SequenceSpec& spec, const RealAlgebraic& lambda, long N, const Rational& tol,
                             std::string* note = nullptr);

// Sets from the termination proofs, with exact membership and witness search.

/// 0 < c1 < 2 and -c1^2/4 < c0 < 1.
bool d2_contains(const Rational& c0, const Rational& c1);
/// 0 < mu < 1, mu < c1 < 2, mu (mu - c1) < c0 < 1.
bool d3_order2_contains(const Rational& c0, const Rational& c1, const Rational& mu);
std::optional<Rational> d3_order2_mu(const Rational& c0, const Rational& c1);
/// The semialgebraic set in (c0, c1, c2) from the order-three proof.
bool d3_contains(const Rational& c0, const Rational& c1, const Rational& c2);
bool d4_contains(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& mu);
std::optional<Rational> d4_mu(const Rational& c0, const Rational& c1, const Rational& c2);

/// Exact cone check of (y0 >= 0, y_k >= mu y_{k-1}) implies
/// sum c_j y_j >= mu y_{r-1}.
bool mu_cone_implication(const std::vector<Rational>& c, const Rational& mu);
/// Whether some mu > 0 satisfies the implication above for c = (v, u - v, 1 - u).
bool cfinite_mu_exists(const Rational& u, const Rational& v);

}  // namespace pfpos
