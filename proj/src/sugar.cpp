#include "elx/sugar.hpp"

namespace elx {

namespace {

void require_ground(const Concept& c) {
  if (!is_ground(c)) throw SugarError("sugar axioms take ground concepts only");
}

Concept chain_of(const std::vector<std::string>& roles, Concept inner) {
  for (auto it = roles.rbegin(); it != roles.rend(); ++it) inner = Concept::exists(*it, std::move(inner));
  return inner;
}

struct Compiler {
  const Concept x;

  Axiom operator()(const RoleChain& s) const {
    if (s.lhs.empty() || s.rhs.empty()) throw SugarError("role chains need at least one role on each side");
    if (s.rhs.size() != 1) {
      throw SugarError(
          "role chains with a composite right-hand side are role-value-maps; their entailment is "
          "undecidable, so only a single role is accepted on the right");
    }
    return normalize(Axiom{chain_of(s.lhs, x), Concept::exists(s.rhs.front(), x)});
  }

  Axiom operator()(const SelfRestriction& s) const {
    require_ground(s.lhs);
    return normalize(Axiom{Concept::conj(s.lhs, x), Concept::exists(s.role, x)});
  }

  Axiom operator()(const LocalRoleValueMap& s) const {
    require_ground(s.lhs);
    return normalize(Axiom{Concept::conj(s.lhs, Concept::exists(s.sub_role, x)), Concept::exists(s.super_role, x)});
  }

  Axiom operator()(const GeneralizedChain& s) const {
    require_ground(s.guard);
    Concept inner = Concept::conj(s.guard, x);
    for (auto it = s.prefix.rbegin(); it != s.prefix.rend(); ++it) {
      require_ground(it->first);
      inner = Concept::conj(it->first, Concept::exists(it->second, inner));
    }
    return normalize(Axiom{inner, Concept::exists(s.rhs_role, x)});
  }
};

}  // namespace

Axiom desugar(const SugarAxiom& sugar, const std::string& variable) {
  return std::visit(Compiler{Concept::var(variable)}, sugar);
}

}  // namespace elx
