#pragma once

// Classical constructors expressed as concept-variable axioms.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "elx/concept.hpp"
#include "elx/error.hpp"

namespace elx {

/// r1 ∘ … ∘ rm ⊑ s1 ∘ … ∘ sn. Only n = 1 can be compiled.
struct RoleChain {
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
};

/// C ⊑ ∃r.Self. A Top lhs states that r is reflexive.
struct SelfRestriction {
  Concept lhs;
  std::string role;
};

/// C ⊑ (r ⊆ s): every r-successor of a C-instance is also an s-successor.
struct LocalRoleValueMap {
  Concept lhs;
  std::string sub_role;
  std::string super_role;
};

/// C0 ⊓ ∃r1.(C1 ⊓ ∃r2.(… ∃rn.(Cn ⊓ X))) ⊑ ∃s.X.
/// `prefix` holds the pairs (C0, r1) … (Cn-1, rn) and `guard` is Cn.
struct GeneralizedChain {
  std::vector<std::pair<Concept, std::string>> prefix;
  Concept guard;
  std::string rhs_role;
};

using SugarAxiom = std::variant<RoleChain, SelfRestriction, LocalRoleValueMap, GeneralizedChain>;

/// Raised for sugar that has no decidable encoding.
class SugarError : public Error {
 public:
  using Error::Error;
};

/// Compiles a sugar axiom using the given variable name.
Axiom desugar(const SugarAxiom& sugar, const std::string& variable = "__v0");

}  // namespace elx
