#include "elx/expansion.hpp"

#include "elx/error.hpp"
#include "elx/fragments.hpp"
#include "elx/syntax.hpp"

namespace elx {

namespace {

ConceptSet positive_fillers(const Ontology& kb) {
  ConceptSet out;
  for (const auto& c : positive_subconcepts(kb)) {
    if (c.is_exists()) out.insert(c.filler());
  }
  return out;
}

}  // namespace

ConceptSet h0(const Axiom& goal) {
  if (!is_ground(goal)) {
    throw Error("the initial base needs a ground goal; generalize '" + print_axiom(goal) + "' first");
  }
  ConceptSet out{goal.lhs};
  for (const auto& c : subconcepts(goal.lhs)) {
    if (c.is_exists()) out.insert(c.filler());
  }
  return out;
}

ConceptSet expand_level(const ConceptSet& base, const Ontology& kb) {
  ConceptSet out = base;
  for (const auto& d : positive_fillers(kb)) {
    if (is_ground(d)) {
      out.insert(d);
    } else if (!base.empty()) {
      out.merge(ground_instances(d, base));
    }
  }
  return out;
}

ExpansionTrace expansion_base(const Ontology& kb, const Axiom& goal, int level_budget) {
  if (level_budget < 0) throw Error("the level budget must be nonnegative");
  ExpansionTrace trace;
  trace.levels.push_back(h0(goal));
  for (int level = 1; level <= level_budget; ++level) {
    ConceptSet next = expand_level(trace.levels.back(), kb);
    const bool same = next == trace.levels.back();
    trace.levels.push_back(std::move(next));
    if (same) {
      trace.fixpoint_reached = true;
      break;
    }
  }
  trace.grounded = ground_instances(kb, trace.final_base());
  return trace;
}

ConceptSet closed_form_base(const Ontology& kb, const Axiom& goal) {
  ConceptSet out = h0(goal);
  for (const auto& d : positive_fillers(kb)) {
    if (is_ground(d)) out.insert(d);
  }
  return out;
}

Ontology v1_normalize(const Ontology& kb) {
  require_gelt(kb);
  Ontology out;
  for (const auto& a : kb) {
    std::vector<Concept> parts;
    if (a.rhs.is_conj()) {
      parts.assign(a.rhs.conjuncts().begin(), a.rhs.conjuncts().end());
    } else {
      parts.push_back(a.rhs);
    }
    for (const auto& rhs : parts) {
      Substitution lhs_only;
      const auto kept = vars(rhs);
      for (const auto& v : vars(a.lhs)) {
        lhs_only[v] = kept.contains(v) ? Concept::var(v) : Concept::top();
      }
      out.add({apply_substitution(lhs_only, a.lhs), rhs});
    }
  }
  return out;
}

}  // namespace elx
