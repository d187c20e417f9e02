#pragma once

// Classical EL reasoning by completion-rule saturation.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "elx/concept.hpp"
#include "elx/interpretation.hpp"

namespace elx {

/// Name standing for Top inside normal axioms. Not writable in concrete syntax.
inline constexpr std::string_view kTopName = "#top";
/// Prefix of names introduced for complex concepts.
inline constexpr std::string_view kDefinitionPrefix = "#def:";

/// One of A ⊑ B, A1 ⊓ A2 ⊑ B, A ⊑ ∃r.B, ∃r.A ⊑ B over names (or kTopName).
struct NormalAxiom {
  enum class Kind : std::uint8_t { Subsumption, Conjunction, ExistsRight, ExistsLeft };

  Kind kind;
  std::string lhs;
  std::string lhs2;  // second conjunct for Conjunction
  std::string role;  // for ExistsRight / ExistsLeft
  std::string rhs;

  static NormalAxiom subsumption(std::string a, std::string b) { return {Kind::Subsumption, std::move(a), {}, {}, std::move(b)}; }
  static NormalAxiom conjunction(std::string a1, std::string a2, std::string b) {
    if (a2 < a1) std::swap(a1, a2);
    return {Kind::Conjunction, std::move(a1), std::move(a2), {}, std::move(b)};
  }
  static NormalAxiom exists_right(std::string a, std::string r, std::string b) {
    return {Kind::ExistsRight, std::move(a), {}, std::move(r), std::move(b)};
  }
  static NormalAxiom exists_left(std::string r, std::string a, std::string b) {
    return {Kind::ExistsLeft, std::move(a), {}, std::move(r), std::move(b)};
  }

  friend auto operator<=>(const NormalAxiom&, const NormalAxiom&) = default;
};

/// Structural transformation of a ground ontology into normal axioms.
class NormalizedOntology {
 public:
  NormalizedOntology() = default;
  /// Throws elx::Error on nonground input.
  explicit NormalizedOntology(const Ontology& kb);

  /// Adds C ⊑ D.
  void add(const Axiom& axiom);
  /// Introduces a name equivalent to `c` and returns it.
  std::string define(const Concept& c);
  /// Name of `c` when it is Top, a concept name, or already defined.
  std::string name_of(const Concept& c) const;

  const std::set<NormalAxiom>& axioms() const noexcept { return axioms_; }
  /// Fresh names and the concepts they stand for.
  const std::map<std::string, Concept>& name_table() const noexcept { return table_; }

 private:
  std::string positive_name(const Concept& c);  // N with N ⊑ c
  std::string negative_name(const Concept& c);  // N with c ⊑ N
  void add_rhs(const std::string& lhs, const Concept& rhs);

  std::set<NormalAxiom> axioms_;
  std::map<std::string, Concept> table_;
  std::set<Concept> positive_done_;
  std::set<Concept> negative_done_;
};

/// Result of saturation: derived subsumers S(A) and links R(r).
class SaturationIndex {
 public:
  /// sup ∈ S(sub). Unknown names only subsume themselves and are subsumed by Top.
  bool subsumes(std::string_view sub, std::string_view sup) const;
  std::vector<std::string> subsumers(std::string_view name) const;
  std::vector<std::pair<std::string, std::string>> links(std::string_view role) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::vector<std::string> roles() const;

 private:
  friend class Saturator;
  std::vector<std::string> names_;
  std::map<std::string, std::uint32_t, std::less<>> ids_;
  std::vector<std::vector<std::uint64_t>> subsumer_bits_;
  std::vector<std::vector<std::uint32_t>> subsumer_lists_;
  std::map<std::string, std::set<std::pair<std::uint32_t, std::uint32_t>>, std::less<>> links_;
};

/// Least fixpoint of the completion rules over all names of `axioms` and `names`.
SaturationIndex saturate(const std::set<NormalAxiom>& axioms, const std::set<std::string>& names = {});

NormalizedOntology normalize_ontology(const Ontology& kb);

/// Ground reasoner answering subsumption queries between registered concepts.
class GroundReasoner {
 public:
  /// Saturates `kb` once, with every query concept internalized by a fresh equivalent name.
  GroundReasoner(const Ontology& kb, const ConceptSet& query_concepts);

  /// kb ⊨ sub ⊑ sup. Both sides must be Top, concept names or query concepts.
  bool entails(const Concept& sub, const Concept& sup) const;
  const SaturationIndex& index() const noexcept { return index_; }
  const NormalizedOntology& normalized() const noexcept { return normalized_; }

 private:
  NormalizedOntology normalized_;
  SaturationIndex index_;
};

/// kb ⊨ goal for ground kb and goal.
bool entails_ground(const Ontology& kb, const Axiom& goal);

/// Canonical interpretation: one element x_C per C in the base, tagged by C.
struct CanonicalInterpretation {
  FiniteInterpretation model;
  std::vector<Concept> tags;  // tags[i] defines element i
};

/// Throws elx::Error on an empty or nonground base.
CanonicalInterpretation canonical_interpretation(const Ontology& kb, const ConceptSet& base);

}  // namespace elx
