#include "pfpos/classifier.hpp"
#include "pfpos/prover.hpp"

namespace pfpos {

Verdict prove_auto(const SequenceSpec& spec, long max_iter) {
  if (spec.rec.order() == 1) return order1_decide(spec);
  const ClassifierReport rep = classify(spec);
  const bool gk = rep.gk == GKPrediction::ProvenTerminates || rep.gk == GKPrediction::ConjecturedTerminates;
  const bool mu = rep.mu == MuPrediction::ProvenTerminatesGeneric;
  const std::string why = std::string("classifier: gk ") + to_string(rep.gk) + ", mu " + to_string(rep.mu);
  auto tag = [&](Verdict v) {
    v.note = v.note.empty() ? why : why + "; " + v.note;
    return v;
  };
  if (gk && !mu) return tag(prove_gk(spec, max_iter));
  if (mu && !gk) return tag(prove_mu(spec, max_iter));

  GKSearch g(spec);
  MuSearch m(spec);
  long used = 0;
  while (used < max_iter) {
    ++used;
    if (auto v = g.step()) {
      v->iterations_used = used;
      return tag(*v);
    }
    if (used >= max_iter) break;
    ++used;
    if (auto v = m.step()) {
      v->iterations_used = used;
      return tag(*v);
    }
  }
  Verdict v = g.unknown();
  v.engine = "auto";
  v.iterations_used = used;
  v.note = g.unknown().note + "; " + m.unknown().note;
  return tag(v);
}

}  // namespace pfpos
