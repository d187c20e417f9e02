#pragma once

// Concepts, axioms and ontologies of EL extended with concept variables.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace elx {

/// Constructor tags, in the order used by the total order on concepts.
enum class ConceptKind : std::uint8_t { Top, Var, Atom, Exists, Conj };

/// Immutable, structurally shared concept term.
///
/// Values built through `top`, `atom`, `var`, `exists` over canonical fillers
/// and `conj` are canonical: conjunctions are flattened, free of Top,
/// deduplicated, sorted and of length at least two. `raw_conj` builds an
/// uncanonicalized conjunction node; `normalize` turns any tree into its
/// canonical form.
class Concept {
 public:
  /// Top.
  Concept();

  static Concept top();
  static Concept atom(std::string name);
  static Concept var(std::string name);
  static Concept exists(std::string role, Concept filler);
  static Concept conj(std::vector<Concept> parts);
  static Concept conj(Concept a, Concept b);
  static Concept raw_conj(std::vector<Concept> parts);

  ConceptKind kind() const noexcept;
  bool is_top() const noexcept { return kind() == ConceptKind::Top; }
  bool is_atom() const noexcept { return kind() == ConceptKind::Atom; }
  bool is_var() const noexcept { return kind() == ConceptKind::Var; }
  bool is_exists() const noexcept { return kind() == ConceptKind::Exists; }
  bool is_conj() const noexcept { return kind() == ConceptKind::Conj; }

  /// Concept name, variable name, or role of an existential restriction.
  const std::string& name() const noexcept;
  const std::string& role() const noexcept { return name(); }
  /// Filler of an existential restriction.
  const Concept& filler() const;
  /// Conjuncts of a conjunction; empty for every other kind.
  std::span<const Concept> conjuncts() const noexcept;

  std::size_t hash() const noexcept;
  /// Number of nodes in the tree.
  std::size_t size() const noexcept;

  friend bool operator==(const Concept& a, const Concept& b) noexcept;
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b) noexcept;

  struct Node;  // opaque, defined in concept.cpp

 private:
  explicit Concept(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct ConceptHash {
  std::size_t operator()(const Concept& c) const noexcept { return c.hash(); }
};

using ConceptSet = std::set<Concept>;

/// General concept inclusion lhs ⊑ rhs.
struct Axiom {
  Concept lhs;
  Concept rhs;

  friend bool operator==(const Axiom&, const Axiom&) = default;
  friend std::strong_ordering operator<=>(const Axiom& a, const Axiom& b) noexcept {
    if (auto c = a.lhs <=> b.lhs; c != 0) return c;
    return a.rhs <=> b.rhs;
  }
};

/// Finite set of axioms. Iteration follows insertion order; duplicates are dropped.
class Ontology {
 public:
  Ontology() = default;
  Ontology(std::initializer_list<Axiom> axioms);
  template <typename It>
  Ontology(It first, It last) {
    for (; first != last; ++first) add(*first);
  }

  /// Returns false when the axiom was already present.
  bool add(const Axiom& axiom);
  void add_all(const Ontology& other);
  bool contains(const Axiom& axiom) const { return index_.contains(axiom); }

  std::size_t size() const noexcept { return axioms_.size(); }
  bool empty() const noexcept { return axioms_.empty(); }
  const std::vector<Axiom>& axioms() const noexcept { return axioms_; }
  auto begin() const noexcept { return axioms_.begin(); }
  auto end() const noexcept { return axioms_.end(); }

  /// Equality is set equality.
  friend bool operator==(const Ontology& a, const Ontology& b) { return a.index_ == b.index_; }

 private:
  std::vector<Axiom> axioms_;
  std::set<Axiom> index_;
};

/// Mapping from variable names to concepts.
using Substitution = std::map<std::string, Concept>;

/// Names occurring in an expression, by namespace.
struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> variables;

  void merge(const Signature& other);
};

Concept normalize(const Concept& c);
Axiom normalize(const Axiom& a);
bool is_canonical(const Concept& c);

/// All subterms of the canonical tree, including the concept itself.
ConceptSet subconcepts(const Concept& c);
ConceptSet subconcepts(const Axiom& a);
ConceptSet subconcepts(const Ontology& kb);

struct PolarSubconcepts {
  ConceptSet positive;
  ConceptSet negative;
};

/// Positive occurrences are the subterms of the rhs, negative ones those of the lhs.
PolarSubconcepts polar_subconcepts(const Axiom& a);
ConceptSet positive_subconcepts(const Ontology& kb);

std::set<std::string> vars(const Concept& c);
std::set<std::string> vars(const Axiom& a);
bool is_ground(const Concept& c);
bool is_ground(const Axiom& a);
bool is_ground(const Ontology& kb);

/// Number of occurrences of each variable.
std::map<std::string, int> var_occurrences(const Concept& c);

Signature signature(const Concept& c);
Signature signature(const Axiom& a);
Signature signature(const Ontology& kb);

/// Replaces every variable by its image and normalizes.
/// Throws UnboundVariableError when a variable has no image.
Concept apply_substitution(const Substitution& theta, const Concept& c);
Axiom apply_substitution(const Substitution& theta, const Axiom& a);

/// All instances of `c` whose variables are mapped into `base`.
ConceptSet ground_instances(const Concept& c, const ConceptSet& base);
/// H-ground instances of an axiom; a ground axiom yields itself.
/// Throws elx::Error on an empty base with a nonground axiom.
std::set<Axiom> ground_instances(const Axiom& a, const ConceptSet& base);
Ontology ground_instances(const Ontology& kb, const ConceptSet& base);

}  // namespace elx

template <>
struct std::hash<elx::Concept> {
  std::size_t operator()(const elx::Concept& c) const noexcept { return c.hash(); }
};
