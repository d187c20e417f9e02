#pragma once

// Entailment decisions for ontologies with concept variables.

#include <map>
#include <string>
#include <vector>

#include "elx/concept.hpp"
#include "elx/expansion.hpp"
#include "elx/saturation.hpp"

namespace elx {

enum class Status { Entailed, NotEntailed, Unknown };

std::string to_string(Status s);

struct EntailmentVerdict {
  Status status = Status::Unknown;
  /// Expansion level the verdict was reached at.
  int level = 0;
  bool definitive = false;
  /// The goal actually decided: variables replaced by fresh concept names.
  Axiom goal;
  /// Variable name to the fresh concept name standing for it.
  std::map<std::string, std::string> fresh_names;
  /// Bases of levels 0..level.
  std::vector<ConceptSet> levels;
  /// The ontology grounded over the base at `level`. For Entailed this is the
  /// grounded subset the goal follows from.
  Ontology witness;

  const ConceptSet& base() const { return levels.back(); }
};

struct GeneralizedGoal {
  Axiom goal;
  std::map<std::string, std::string> fresh_names;
};

/// Replaces each variable of `goal` by a distinct concept name F0, F1, …
/// that occurs neither in `kb` nor in `goal`.
GeneralizedGoal generalize_goal(const Axiom& goal, const Ontology& kb);

/// Decides kb ⊨² goal for a gelo ontology by grounding over growing expansion
/// bases. NotEntailed is definitive only once the base reaches a fixpoint;
/// running out of levels first yields Unknown. Gelt ontologies always reach
/// a fixpoint after one level, so they get at least that much budget.
/// Throws FragmentError when an axiom of `kb` is outside gelo.
EntailmentVerdict decide(const Ontology& kb, const Axiom& goal, int level_budget = kDefaultLevelBudget);

/// Canonical interpretation over the verdict's final base. For a definitive
/// NotEntailed verdict it is a second-order model of the ontology violating the goal.
CanonicalInterpretation canonical_countermodel(const EntailmentVerdict& verdict);

/// kb↓base ⊨ goal↓base for any ontology: every instance of the goal over
/// `base` follows from the grounding of `kb` over `base`.
/// Throws elx::Error on an empty or nonground base.
bool check_schema(const Ontology& kb, const Axiom& goal, const ConceptSet& base);

}  // namespace elx
