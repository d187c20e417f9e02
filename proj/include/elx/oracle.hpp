#pragma once

// Brute-force second-order semantics over finite interpretations.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "elx/concept.hpp"
#include "elx/interpretation.hpp"

namespace elx {

enum class ValuationMode {
  /// Every assignment of variables to subsets of the domain.
  All,
  /// Assignments of variables to one-element subsets.
  Singleton,
};

/// Largest number of interpretations (or valuations) an enumeration may visit.
inline constexpr std::uint64_t kDefaultStateCeiling = std::uint64_t{1} << 30;

/// Extension of `c` under the interpretation and valuation.
/// Throws UnboundVariableError when `eta` misses a variable of `c`.
ElementSet eval_concept(const FiniteInterpretation& interp, const Valuation& eta, const Concept& c);

bool satisfies(const FiniteInterpretation& interp, const Valuation& eta, const Axiom& a);

/// Whether singleton valuations decide `a`: it is range restricted with a linear lhs.
bool singleton_applicable(const Axiom& a);

/// First valuation (in enumeration order) under which the axiom fails.
/// Singleton mode throws elx::Error when the axiom does not qualify or the domain is empty.
std::optional<Valuation> find_violation(const FiniteInterpretation& interp, const Axiom& a, ValuationMode mode,
                                        std::uint64_t ceiling = kDefaultStateCeiling);

/// I ⊨² a: the axiom holds under every valuation considered by `mode`.
bool satisfies_so(const FiniteInterpretation& interp, const Axiom& a, ValuationMode mode);

struct KbCheck {
  bool satisfied = true;
  std::optional<Axiom> violated_axiom;
  std::optional<Valuation> valuation;

  explicit operator bool() const noexcept { return satisfied; }
};

/// I ⊨² kb, using singleton valuations for every axiom that qualifies.
KbCheck satisfies_so_kb(const FiniteInterpretation& interp, const Ontology& kb);

struct Countermodel {
  FiniteInterpretation model;
  /// Valuation violating the goal (empty for ground goals).
  Valuation valuation;
};

/// Searches interpretations over the signature of kb and goal with domain
/// sizes 1..max_domain for a second-order model of kb violating the goal.
/// Finding none is not a proof of entailment.
/// Throws ResourceLimitError when the search space exceeds `ceiling`.
std::optional<Countermodel> refute_entailment(const Ontology& kb, const Axiom& goal, int max_domain,
                                              std::uint64_t ceiling = kDefaultStateCeiling);

/// r1 ∘ … ∘ rm ⊆ s1 ∘ … ∘ sn in the interpretation.
bool check_role_composition(const FiniteInterpretation& interp, std::span<const std::string> roles_lhs,
                            std::span<const std::string> roles_rhs);

/// Renders a valuation as "η(?X)={a,b}, η(?Y)={c}".
std::string format_valuation(const FiniteInterpretation& interp, const Valuation& eta);

}  // namespace elx
