#include "elx/entailment.hpp"

#include "elx/error.hpp"
#include "elx/fragments.hpp"

namespace elx {

std::string to_string(Status s) {
  switch (s) {
    case Status::Entailed:
      return "ENTAILED";
    case Status::NotEntailed:
      return "NOT_ENTAILED";
    case Status::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

GeneralizedGoal generalize_goal(const Axiom& goal, const Ontology& kb) {
  GeneralizedGoal out{goal, {}};
  const auto goal_vars = vars(goal);
  if (goal_vars.empty()) return out;

  Signature taken = signature(kb);
  taken.merge(signature(goal));
  Substitution theta;
  int counter = 0;
  for (const auto& v : goal_vars) {
    std::string name;
    do {
      name = "F" + std::to_string(counter++);
    } while (taken.concepts.contains(name) || taken.roles.contains(name));
    theta.emplace(v, Concept::atom(name));
    out.fresh_names.emplace(v, name);
  }
  out.goal = apply_substitution(theta, goal);
  return out;
}

EntailmentVerdict decide(const Ontology& kb, const Axiom& goal, int level_budget) {
  if (level_budget < 0) throw Error("the level budget must be nonnegative");
  require_gelo(kb);
  bool gelt = true;
  for (const auto& a : kb) gelt = gelt && classify(a).is_gelt;
  if (gelt && level_budget < 1) level_budget = 1;

  auto generalized = generalize_goal(goal, kb);
  EntailmentVerdict verdict;
  verdict.goal = generalized.goal;
  verdict.fresh_names = std::move(generalized.fresh_names);
  verdict.levels.push_back(h0(verdict.goal));

  for (int level = 0;; ++level) {
    verdict.level = level;
    verdict.witness = ground_instances(kb, verdict.base());
    if (entails_ground(verdict.witness, verdict.goal)) {
      verdict.status = Status::Entailed;
      verdict.definitive = true;
      return verdict;
    }
    ConceptSet next = expand_level(verdict.base(), kb);
    if (next == verdict.base()) {
      verdict.status = Status::NotEntailed;
      verdict.definitive = true;
      return verdict;
    }
    if (level == level_budget) {
      verdict.status = Status::Unknown;
      verdict.definitive = false;
      return verdict;
    }
    verdict.levels.push_back(std::move(next));
  }
}

CanonicalInterpretation canonical_countermodel(const EntailmentVerdict& verdict) {
  return canonical_interpretation(verdict.witness, verdict.base());
}

bool check_schema(const Ontology& kb, const Axiom& goal, const ConceptSet& base) {
  if (base.empty()) throw Error("the schema base must not be empty");
  for (const auto& c : base) {
    if (!is_ground(c)) throw Error("the schema base must be ground");
  }
  const Ontology grounded = ground_instances(kb, base);
  for (const auto& instance : ground_instances(goal, base)) {
    if (!entails_ground(grounded, instance)) return false;
  }
  return true;
}

}  // namespace elx
