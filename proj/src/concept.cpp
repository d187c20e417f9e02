#include "elx/concept.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "elx/error.hpp"

namespace elx {

struct Concept::Node {
  ConceptKind kind = ConceptKind::Top;
  std::string name;
  std::vector<Concept> children;
  std::size_t hash = 0;
  std::size_t size = 1;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const std::shared_ptr<const Concept::Node>& top_node() {
  static const auto node = [] {
    auto n = std::make_shared<Concept::Node>();
    n->hash = mix(0, static_cast<std::size_t>(ConceptKind::Top));
    return std::shared_ptr<const Concept::Node>(std::move(n));
  }();
  return node;
}

void check_identifier(const std::string& name, const char* what) {
  if (name.empty()) throw std::invalid_argument(std::string("empty ") + what + " identifier");
}

}  // namespace

Concept::Concept() : node_(top_node()) {}

Concept::Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

std::shared_ptr<Concept::Node> make_node(ConceptKind kind, std::string name,
                                         std::vector<Concept> children) {
  auto n = std::make_shared<Concept::Node>();
  n->kind = kind;
  n->name = std::move(name);
  n->children = std::move(children);
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  h = mix(h, std::hash<std::string>{}(n->name));
  for (const auto& c : n->children) {
    h = mix(h, c.hash());
    n->size += c.size();
  }
  n->hash = h;
  return n;
}

}  // namespace

Concept Concept::top() { return Concept(); }

Concept Concept::atom(std::string name) {
  check_identifier(name, "concept name");
  return Concept(make_node(ConceptKind::Atom, std::move(name), {}));
}

Concept Concept::var(std::string name) {
  check_identifier(name, "variable");
  return Concept(make_node(ConceptKind::Var, std::move(name), {}));
}

Concept Concept::exists(std::string role, Concept filler) {
  check_identifier(role, "role");
  return Concept(make_node(ConceptKind::Exists, std::move(role), {std::move(filler)}));
}

Concept Concept::raw_conj(std::vector<Concept> parts) {
  return Concept(make_node(ConceptKind::Conj, {}, std::move(parts)));
}

Concept Concept::conj(std::vector<Concept> parts) {
  std::vector<Concept> flat;
  flat.reserve(parts.size());
  for (auto& p : parts) {
    if (p.is_conj()) {
      for (const auto& q : p.conjuncts()) {
        if (!q.is_top()) flat.push_back(q);
      }
    } else if (!p.is_top()) {
      flat.push_back(std::move(p));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return top();
  if (flat.size() == 1) return flat.front();
  return raw_conj(std::move(flat));
}

Concept Concept::conj(Concept a, Concept b) {
  std::vector<Concept> parts;
  parts.push_back(std::move(a));
  parts.push_back(std::move(b));
  return conj(std::move(parts));
}

ConceptKind Concept::kind() const noexcept { return node_->kind; }
const std::string& Concept::name() const noexcept { return node_->name; }

const Concept& Concept::filler() const {
  if (!is_exists()) throw std::logic_error("filler() on a concept that is not an existential");
  return node_->children.front();
}

std::span<const Concept> Concept::conjuncts() const noexcept {
  if (!is_conj()) return {};
  return node_->children;
}

std::size_t Concept::hash() const noexcept { return node_->hash; }
std::size_t Concept::size() const noexcept { return node_->size; }

bool operator==(const Concept& a, const Concept& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (int c = x.name.compare(y.name); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::lexicographical_compare_three_way(x.children.begin(), x.children.end(),
                                                y.children.begin(), y.children.end());
}

// --- Ontology --------------------------------------------------------------

Ontology::Ontology(std::initializer_list<Axiom> axioms) {
  for (const auto& a : axioms) add(a);
}

bool Ontology::add(const Axiom& axiom) {
  if (!index_.insert(axiom).second) return false;
  axioms_.push_back(axiom);
  return true;
}

void Ontology::add_all(const Ontology& other) {
  for (const auto& a : other) add(a);
}

void Signature::merge(const Signature& other) {
  concepts.insert(other.concepts.begin(), other.concepts.end());
  roles.insert(other.roles.begin(), other.roles.end());
  variables.insert(other.variables.begin(), other.variables.end());
}

// --- canonical form --------------------------------------------------------

Concept normalize(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Atom:
    case ConceptKind::Var:
      return c;
    case ConceptKind::Exists:
      return Concept::exists(c.role(), normalize(c.filler()));
    case ConceptKind::Conj: {
      std::vector<Concept> parts;
      parts.reserve(c.conjuncts().size());
      for (const auto& p : c.conjuncts()) parts.push_back(normalize(p));
      return Concept::conj(std::move(parts));
    }
  }
  return c;
}

Axiom normalize(const Axiom& a) { return {normalize(a.lhs), normalize(a.rhs)}; }

bool is_canonical(const Concept& c) { return normalize(c) == c; }

// --- subterms --------------------------------------------------------------

namespace {

void collect_subterms(const Concept& c, ConceptSet& out) {
  if (!out.insert(c).second) return;
  if (c.is_exists()) {
    collect_subterms(c.filler(), out);
  } else {
    for (const auto& p : c.conjuncts()) collect_subterms(p, out);
  }
}

void collect_signature(const Concept& c, Signature& sig) {
  switch (c.kind()) {
    case ConceptKind::Top:
      break;
    case ConceptKind::Atom:
      sig.concepts.insert(c.name());
      break;
    case ConceptKind::Var:
      sig.variables.insert(c.name());
      break;
    case ConceptKind::Exists:
      sig.roles.insert(c.role());
      collect_signature(c.filler(), sig);
      break;
    case ConceptKind::Conj:
      for (const auto& p : c.conjuncts()) collect_signature(p, sig);
      break;
  }
}

void count_vars(const Concept& c, std::map<std::string, int>& out) {
  if (c.is_var()) {
    ++out[c.name()];
  } else if (c.is_exists()) {
    count_vars(c.filler(), out);
  } else {
    for (const auto& p : c.conjuncts()) count_vars(p, out);
  }
}

}  // namespace

ConceptSet subconcepts(const Concept& c) {
  ConceptSet out;
  collect_subterms(c, out);
  return out;
}

ConceptSet subconcepts(const Axiom& a) {
  ConceptSet out;
  collect_subterms(a.lhs, out);
  collect_subterms(a.rhs, out);
  return out;
}

ConceptSet subconcepts(const Ontology& kb) {
  ConceptSet out;
  for (const auto& a : kb) {
    collect_subterms(a.lhs, out);
    collect_subterms(a.rhs, out);
  }
  return out;
}

PolarSubconcepts polar_subconcepts(const Axiom& a) {
  return {subconcepts(a.rhs), subconcepts(a.lhs)};
}

ConceptSet positive_subconcepts(const Ontology& kb) {
  ConceptSet out;
  for (const auto& a : kb) collect_subterms(a.rhs, out);
  return out;
}

std::map<std::string, int> var_occurrences(const Concept& c) {
  std::map<std::string, int> out;
  count_vars(c, out);
  return out;
}

std::set<std::string> vars(const Concept& c) { return signature(c).variables; }

std::set<std::string> vars(const Axiom& a) { return signature(a).variables; }

bool is_ground(const Concept& c) { return vars(c).empty(); }
bool is_ground(const Axiom& a) { return is_ground(a.lhs) && is_ground(a.rhs); }

bool is_ground(const Ontology& kb) {
  return std::all_of(kb.begin(), kb.end(), [](const Axiom& a) { return is_ground(a); });
}

Signature signature(const Concept& c) {
  Signature sig;
  collect_signature(c, sig);
  return sig;
}

Signature signature(const Axiom& a) {
  Signature sig;
  collect_signature(a.lhs, sig);
  collect_signature(a.rhs, sig);
  return sig;
}

Signature signature(const Ontology& kb) {
  Signature sig;
  for (const auto& a : kb) {
    collect_signature(a.lhs, sig);
    collect_signature(a.rhs, sig);
  }
  return sig;
}

// --- substitution and grounding --------------------------------------------

Concept apply_substitution(const Substitution& theta, const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Atom:
      return c;
    case ConceptKind::Var: {
      auto it = theta.find(c.name());
      if (it == theta.end()) throw UnboundVariableError(c.name());
      return normalize(it->second);
    }
    case ConceptKind::Exists:
      return Concept::exists(c.role(), apply_substitution(theta, c.filler()));
    case ConceptKind::Conj: {
      std::vector<Concept> parts;
      parts.reserve(c.conjuncts().size());
      for (const auto& p : c.conjuncts()) parts.push_back(apply_substitution(theta, p));
      return Concept::conj(std::move(parts));
    }
  }
  return c;
}

Axiom apply_substitution(const Substitution& theta, const Axiom& a) {
  return {apply_substitution(theta, a.lhs), apply_substitution(theta, a.rhs)};
}

namespace {

// Calls `visit` with every substitution mapping `variables` into `base`.
void for_each_substitution(const std::vector<std::string>& variables, const ConceptSet& base,
                           const std::function<void(const Substitution&)>& visit) {
  if (variables.empty()) {
    visit(Substitution{});
    return;
  }
  if (base.empty()) throw Error("cannot ground a nonground expression over an empty concept base");
  std::vector<Concept> values(base.begin(), base.end());
  std::vector<std::size_t> digits(variables.size(), 0);
  Substitution theta;
  for (;;) {
    for (std::size_t i = 0; i < variables.size(); ++i) theta[variables[i]] = values[digits[i]];
    visit(theta);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == values.size()) digits[i++] = 0;
    if (i == digits.size()) return;
  }
}

}  // namespace

ConceptSet ground_instances(const Concept& c, const ConceptSet& base) {
  auto vs = vars(c);
  ConceptSet out;
  for_each_substitution({vs.begin(), vs.end()}, base,
                        [&](const Substitution& theta) { out.insert(apply_substitution(theta, c)); });
  return out;
}

std::set<Axiom> ground_instances(const Axiom& a, const ConceptSet& base) {
  auto vs = vars(a);
  std::set<Axiom> out;
  for_each_substitution({vs.begin(), vs.end()}, base,
                        [&](const Substitution& theta) { out.insert(apply_substitution(theta, a)); });
  return out;
}

Ontology ground_instances(const Ontology& kb, const ConceptSet& base) {
  Ontology out;
  for (const auto& a : kb) {
    for (const auto& g : ground_instances(a, base)) out.add(g);
  }
  return out;
}

}  // namespace elx
