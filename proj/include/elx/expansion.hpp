#pragma once

// Expansion bases: the ground concepts needed to instantiate concept variables.

#include <vector>

#include "elx/concept.hpp"

namespace elx {

inline constexpr int kDefaultLevelBudget = 10;

struct ExpansionTrace {
  /// levels[i] is the base at level i, starting from the goal's initial base.
  std::vector<ConceptSet> levels;
  /// The last two levels coincide, so the last level is the full expansion base.
  bool fixpoint_reached = false;
  /// The ontology grounded over the last level.
  Ontology grounded;

  const ConceptSet& final_base() const { return levels.back(); }
};

/// {F} together with every existential filler occurring in F, for the goal F ⊑ E.
/// Throws elx::Error on a nonground goal.
ConceptSet h0(const Axiom& goal);

/// The base extended by the base-ground instances of every positively
/// occurring existential filler of `kb`.
ConceptSet expand_level(const ConceptSet& base, const Ontology& kb);

/// Iterates expand_level from h0(goal), computing at most levels 0..level_budget.
/// Stops as soon as a level repeats.
ExpansionTrace expansion_base(const Ontology& kb, const Axiom& goal, int level_budget = kDefaultLevelBudget);

/// The base a gelt ontology is known to reach: h0(goal) plus every ground
/// positively occurring existential filler of `kb`.
ConceptSet closed_form_base(const Ontology& kb, const Axiom& goal);

/// Rewrites a gelt ontology so that every axiom has at most one variable:
/// conjunctive right-hand sides are split, and variables left only on the
/// lhs are replaced by Top. Throws FragmentError on non-gelt input.
Ontology v1_normalize(const Ontology& kb);

}  // namespace elx
