#pragma once

#include "pfpos/qe.hpp"
#include "pfpos/recurrence.hpp"
#include "pfpos/serialize.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pfpos {

enum class Status { True, False, Unknown };

const char* to_string(Status s);

// rho, n and bound refer to the shift-normalized sequence g(k) = f(k + shift);
// checked_prefix holds original terms f(0), f(1), ...

struct GKCertificate {
  long rho = 0;
  long shift = 0;
  std::vector<Rational> checked_prefix;
};

struct MuCertificate {
  long n = 0;
  RealAlgebraic mu;
  long shift = 0;
  std::vector<Rational> checked_prefix;
};

/// Every real root of p_0 p_1 lies below bound + 1 (order 1 only).
struct Order1Certificate {
  long bound = -1;
  long shift = 0;
  std::vector<Rational> checked_prefix;
};

struct Witness {
  long n = 0;
  Rational value;
};

struct Verdict {
  Status status = Status::Unknown;
  std::variant<std::monostate, GKCertificate, MuCertificate, Order1Certificate> certificate;
  std::optional<Witness> witness;
  long iterations_used = 0;
  /// "gk", "mu" or "order1".
  std::string engine;
  /// Depth search: every decided induction formula as (rho, truth).
  std::vector<std::pair<long, bool>> phi_trace;
  std::string note;
};

/// Rows q_0 .. q_rho of the rewriting f(n+i) = sum_j q_{i,j}(n) f(n+j),
/// j < r; rows below r are unit vectors.
std::vector<std::vector<RatFunc>> build_gk_rewriting(const Recurrence& rec, long rho);

/// Phi(rho): for x >= 0, rows 0..rho-1 nonnegative imply row rho
/// nonnegative, with denominators cleared.
LinearConeFormula gk_formula(const Recurrence& rec, long rho);

/// The depth search as a resumable search: one call to step() is one outer
/// iteration. The spec is shift-normalized internally.
class GKSearch {
 public:
  explicit GKSearch(const SequenceSpec& spec);
  /// A verdict when the search concludes, otherwise nothing.
  std::optional<Verdict> step();
  Verdict unknown() const;

 private:
  std::optional<Verdict> check_prefix();
  Rational term(long k);

  ShiftResult shifted_;
  Sequence seq_;
  long next_;
  long iterations_ = 0;
  bool prefix_done_ = false;
  std::vector<std::pair<long, bool>> trace_;
};

/// The scaled-monotonicity search, resumable, over n = 0, 1, 2, ...
class MuSearch {
 public:
  explicit MuSearch(const SequenceSpec& spec);
  std::optional<Verdict> step();
  Verdict unknown() const;

 private:
  Rational term(long k);

  ShiftResult shifted_;
  Sequence seq_;
  MuDecider decider_;
  long next_ = 0;
  long iterations_ = 0;
  bool prefix_done_ = false;
};

Verdict prove_gk(const SequenceSpec& spec, long max_iter = 50);
Verdict prove_mu(const SequenceSpec& spec, long max_iter = 50);
/// Complete decision for first-order recurrences.
Verdict order1_decide(const SequenceSpec& spec);
Verdict prove_auto(const SequenceSpec& spec, long max_iter = 50);

/// f(n+2) - (u+1) f(n+1) + u f(n) = 0 with f(n) = -1 + u^(n-n0+1): exactly
/// n0 nonnegative terms.
SequenceSpec gen_remark_spec(const Rational& u, long n0);

bool verify_certificate(const SequenceSpec& spec, const Verdict& v);

nlohmann::json to_json(const Verdict& v);

}  // namespace pfpos
