#include "pfpos/prover.hpp"

#include "pfpos/image.hpp"
#include "pfpos/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfpos {

const char* to_string(Status s) {
  switch (s) {
    case Status::True: return "True";
    case Status::False: return "False";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

std::vector<std::vector<RatFunc>> build_gk_rewriting(const Recurrence& rec, long rho) {
  const int r = rec.order();
  if (rho < r) throw std::invalid_argument("build_gk_rewriting: rho must be at least the order");
  // Row i is num[i] / prod_{m <= i-r} L(x+m) with L the leading coefficient.
  std::vector<UniPoly> lead;
  for (long m = 0; m <= rho - r; ++m) lead.push_back(rec.leading().shifted(Rational(m)));
  auto den_product = [&](long from, long to) {
    UniPoly d = UniPoly::constant(1);
    for (long m = std::max(from, 0L); m <= to; ++m) d *= lead[static_cast<size_t>(m)];
    return d;
  };
  std::vector<std::vector<UniPoly>> num;
  for (int i = 0; i < r; ++i) {
    std::vector<UniPoly> row(static_cast<size_t>(r));
    row[static_cast<size_t>(i)] = UniPoly::constant(1);
    num.push_back(std::move(row));
  }
  for (long i = r; i <= rho; ++i) {
    const Rational s(i - r);
    std::vector<UniPoly> row(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k) {
      const UniPoly c = -rec.coeff(k).shifted(s);
      if (c.is_zero()) continue;
      // Lift row i-r+k (denominator up to index i-2r+k) to denominator up to i-r-1.
      const UniPoly lift = c * den_product(i - 2 * r + k + 1, i - r - 1);
      const auto& prev = num[static_cast<size_t>(i - r + k)];
      for (int j = 0; j < r; ++j)
        if (!prev[static_cast<size_t>(j)].is_zero()) row[static_cast<size_t>(j)] += lift * prev[static_cast<size_t>(j)];
    }
    num.push_back(std::move(row));
  }
  std::vector<std::vector<RatFunc>> q;
  for (long i = 0; i <= rho; ++i) {
    std::vector<RatFunc> row(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) {
      UniPoly n = num[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (n.is_zero()) continue;
      UniPoly d = UniPoly::constant(1);
      for (long m = 0; m <= i - r; ++m) {
        UniPoly l = lead[static_cast<size_t>(m)];
        UniPoly g = gcd(n, l);
        if (g.degree() > 0) {
          n = exact_div(n, g);
          l = exact_div(l, g);
        }
        d *= l;
      }
      row[static_cast<size_t>(j)] = RatFunc::from_coprime(std::move(n), std::move(d));
    }
    q.push_back(std::move(row));
  }
  return q;
}

LinearConeFormula gk_formula(const Recurrence& rec, long rho) {
  auto q = build_gk_rewriting(rec, rho);
  const Domain domain = Domain::at_least(Rational(0));
  ClearedRows cleared = clear_denominators(q, domain);
  LinearConeFormula f;
  f.conclusion = cleared.forms.back();
  cleared.forms.pop_back();
  f.hypotheses = std::move(cleared.forms);
  f.x_domain = domain;
  f.excluded = std::move(cleared.excluded);
  return f;
}

}  // namespace pfpos

namespace pfpos {

namespace {

Verdict falsified(long n, const Rational& value, long iterations, const char* engine) {
  Verdict v;
  v.status = Status::False;
  v.witness = Witness{n, value};
  v.iterations_used = iterations;
  v.engine = engine;
  return v;
}

// Original terms f(0 .. shift + count - 1).
std::vector<Rational> original_prefix(const ShiftResult& s, Sequence& seq, long count) {
  std::vector<Rational> out = s.prefix;
  for (long k = 0; k < count; ++k) out.push_back(seq[k]);
  return out;
}

// Sign of a - mu b.
int ratio_sign(const Rational& a, const Rational& b, const RealAlgebraic& mu) {
  if (b == 0) return sgn(a);
  const auto o = alg_compare(RealAlgebraic(a / b), mu);
  const int c = o < 0 ? -1 : (o > 0 ? 1 : 0);
  return b > 0 ? c : -c;
}

}  // namespace

GKSearch::GKSearch(const SequenceSpec& spec)
    : shifted_(shift_normalize(spec)), seq_(shifted_.spec), next_(shifted_.spec.rec.order()) {}

Rational GKSearch::term(long k) { return seq_[k]; }

std::optional<Verdict> GKSearch::check_prefix() {
  prefix_done_ = true;
  for (size_t k = 0; k < shifted_.prefix.size(); ++k)
    if (shifted_.prefix[k] < 0) return falsified(static_cast<long>(k), shifted_.prefix[k], 0, "gk");
  for (long k = 0; k < shifted_.spec.rec.order(); ++k)
    if (term(k) < 0) return falsified(shifted_.shift + k, term(k), 0, "gk");
  return std::nullopt;
}

std::optional<Verdict> GKSearch::step() {
  if (!prefix_done_)
    if (auto v = check_prefix()) return v;
  const long n = next_++;
  ++iterations_;
  const bool phi = decide_cone_formula(gk_formula(shifted_.spec.rec, n));
  trace_.emplace_back(n, phi);
  if (phi) {
    Verdict v;
    v.status = Status::True;
    v.certificate = GKCertificate{n, shifted_.shift, original_prefix(shifted_, seq_, n)};
    v.iterations_used = iterations_;
    v.engine = "gk";
    v.phi_trace = trace_;
    return v;
  }
  if (term(n) < 0) {
    Verdict v = falsified(shifted_.shift + n, term(n), iterations_, "gk");
    v.phi_trace = trace_;
    return v;
  }
  return std::nullopt;
}

Verdict GKSearch::unknown() const {
  Verdict v;
  v.iterations_used = iterations_;
  v.engine = "gk";
  v.phi_trace = trace_;
  const long r = shifted_.spec.rec.order();
  v.note = "Phi(rho) false for rho = " + std::to_string(r) + ".." + std::to_string(next_ - 1) + "; f(0.." +
           std::to_string(shifted_.shift + next_ - 1) + ") nonnegative";
  return v;
}

MuSearch::MuSearch(const SequenceSpec& spec)
    : shifted_(shift_normalize(spec)), seq_(shifted_.spec), decider_(shifted_.spec.rec) {}

Rational MuSearch::term(long k) { return seq_[k]; }

std::optional<Verdict> MuSearch::step() {
  if (!prefix_done_) {
    prefix_done_ = true;
    for (size_t k = 0; k < shifted_.prefix.size(); ++k)
      if (shifted_.prefix[k] < 0) return falsified(static_cast<long>(k), shifted_.prefix[k], 0, "mu");
  }
  const long n = next_++;
  ++iterations_;
  if (term(n) < 0) return falsified(shifted_.shift + n, term(n), iterations_, "mu");
  const int r = shifted_.spec.rec.order();
  std::vector<RatioConstraint> constraints;
  for (int j = 0; j + 1 < r; ++j) constraints.push_back({term(n + 1 + j), term(n + j)});
  if (auto mu = decider_.find_mu(n, constraints)) {
    Verdict v;
    v.status = Status::True;
    v.certificate = MuCertificate{n, *mu, shifted_.shift, original_prefix(shifted_, seq_, n + r)};
    v.iterations_used = iterations_;
    v.engine = "mu";
    return v;
  }
  return std::nullopt;
}

Verdict MuSearch::unknown() const {
  Verdict v;
  v.iterations_used = iterations_;
  v.engine = "mu";
  v.note = "no admissible mu for n = 0.." + std::to_string(next_ - 1);
  return v;
}

Verdict prove_gk(const SequenceSpec& spec, long max_iter) {
  GKSearch s(spec);
  for (long i = 0; i < max_iter; ++i)
    if (auto v = s.step()) return *v;
  return s.unknown();
}

Verdict prove_mu(const SequenceSpec& spec, long max_iter) {
  MuSearch s(spec);
  for (long i = 0; i < max_iter; ++i)
    if (auto v = s.step()) return *v;
  return s.unknown();
}

namespace {

long order1_bound(const Recurrence& rec) {
  const UniPoly prod = rec.coeff(0) * rec.coeff(1);
  if (prod.is_zero() || prod.degree() < 1) return -1;
  auto roots = isolate_real_roots(squarefree_part(prod));
  if (roots.empty()) return -1;
  return std::max(floor(roots.back().hi()).get_si(), -1L);
}

}  // namespace

Verdict order1_decide(const SequenceSpec& spec) {
  if (spec.rec.order() != 1) throw std::invalid_argument("order1_decide: order must be 1");
  ShiftResult s = shift_normalize(spec);
  Sequence seq(s.spec);
  for (size_t k = 0; k < s.prefix.size(); ++k)
    if (s.prefix[k] < 0) return falsified(static_cast<long>(k), s.prefix[k], 0, "order1");
  const long bound = order1_bound(s.spec.rec);
  auto certify = [&](long checked) {
    Verdict v;
    v.status = Status::True;
    v.certificate = Order1Certificate{bound, s.shift, original_prefix(s, seq, checked)};
    v.iterations_used = checked;
    v.engine = "order1";
    return v;
  };
  for (long k = 0; k <= bound + 1; ++k) {
    if (seq[k] < 0) return falsified(s.shift + k, seq[k], k + 1, "order1");
    if (seq[k] == 0) return certify(k + 1);
  }
  // Beyond the bound the ratio -p_0/p_1 has constant sign.
  const long k = bound + 2;
  if (seq[k] < 0) return falsified(s.shift + k, seq[k], k + 1, "order1");
  return certify(bound + 2);
}

SequenceSpec gen_remark_spec(const Rational& u, long n0) {
  if (u <= 0 || u >= 1) throw std::invalid_argument("gen_remark_spec: u must lie in (0, 1)");
  if (n0 < 1) throw std::invalid_argument("gen_remark_spec: n0 must be positive");
  Recurrence rec({UniPoly::constant(u), UniPoly::constant(-(u + 1)), UniPoly::constant(1)});
  return SequenceSpec{rec, {pow(u, 1 - n0) - 1, pow(u, 2 - n0) - 1}};
}

bool verify_certificate(const SequenceSpec& spec, const Verdict& v) {
  if (v.status == Status::Unknown) return false;
  if (v.status == Status::False) {
    if (!v.witness || v.witness->value >= 0) return false;
    return eval_sequence(spec, v.witness->n) == v.witness->value;
  }
  auto prefix_ok = [&](const std::vector<Rational>& prefix, long expected_len) {
    if (static_cast<long>(prefix.size()) != expected_len) return false;
    for (long k = 0; k < expected_len; ++k)
      if (prefix[static_cast<size_t>(k)] < 0 || eval_sequence(spec, k) != prefix[static_cast<size_t>(k)]) return false;
    return true;
  };
  const ShiftResult s = shift_normalize(spec);
  if (const auto* gk = std::get_if<GKCertificate>(&v.certificate)) {
    if (gk->shift != s.shift || gk->rho < spec.rec.order()) return false;
    return prefix_ok(gk->checked_prefix, s.shift + gk->rho) && decide_cone_formula(gk_formula(s.spec.rec, gk->rho));
  }
  if (const auto* mc = std::get_if<MuCertificate>(&v.certificate)) {
    const int r = spec.rec.order();
    if (mc->shift != s.shift || mc->n < 0 || sign(mc->mu) < 0) return false;
    if (!prefix_ok(mc->checked_prefix, s.shift + mc->n + r)) return false;
    for (long k = mc->n; k + 1 < mc->n + r; ++k)
      if (ratio_sign(eval_sequence(s.spec, k + 1), eval_sequence(s.spec, k), mc->mu) < 0) return false;
    return MuDecider(s.spec.rec).universal_holds(mc->n, mc->mu);
  }
  if (const auto* oc = std::get_if<Order1Certificate>(&v.certificate)) {
    if (spec.rec.order() != 1 || oc->shift != s.shift) return false;
    const auto& rec = s.spec.rec;
    const UniPoly prod = rec.coeff(0) * rec.coeff(1);
    if (!prod.is_zero() && count_real_roots(squarefree_part(prod), Domain::greater_than(Rational(oc->bound + 1))) != 0)
      return false;
    if (!prod.is_zero() && prod.eval(Rational(oc->bound + 1)) == 0) return false;
    const long len = static_cast<long>(oc->checked_prefix.size()) - s.shift;
    if (len < 1 || !prefix_ok(oc->checked_prefix, s.shift + len)) return false;
    if (oc->checked_prefix.back() == 0) return true;
    if (len < oc->bound + 2) return false;
    // -p_0/p_1 >= 0 beyond the bound
    return prod.is_zero() || prod.eval(Rational(oc->bound + 1)) < 0;
  }
  return false;
}

nlohmann::json to_json(const Verdict& v) {
  auto strings = [](const std::vector<Rational>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.get_str());
    return out;
  };
  nlohmann::json j;
  j["status"] = to_string(v.status);
  j["engine"] = v.engine;
  j["iterations"] = v.iterations_used;
  j["certificate"] = nullptr;
  if (const auto* gk = std::get_if<GKCertificate>(&v.certificate))
    j["certificate"] = {{"kind", "gk"}, {"rho", gk->rho}, {"shift", gk->shift}, {"checked_prefix", strings(gk->checked_prefix)}};
  else if (const auto* mc = std::get_if<MuCertificate>(&v.certificate))
    j["certificate"] = {{"kind", "mu"},
                        {"n", mc->n},
                        {"mu", to_json(mc->mu)},
                        {"shift", mc->shift},
                        {"checked_prefix", strings(mc->checked_prefix)}};
  else if (const auto* oc = std::get_if<Order1Certificate>(&v.certificate))
    j["certificate"] = {{"kind", "order1"}, {"bound", oc->bound}, {"shift", oc->shift}, {"checked_prefix", strings(oc->checked_prefix)}};
  j["witness"] = v.witness ? nlohmann::json{{"n", v.witness->n}, {"value", v.witness->value.get_str()}} : nlohmann::json();
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& [rho, ok] : v.phi_trace) trace.push_back({rho, ok});
  j["phi_trace"] = trace;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace pfpos
