#include "elx/saturation.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "elx/error.hpp"
#include "elx/syntax.hpp"

namespace elx {

// --- structural transformation ---------------------------------------------

NormalizedOntology::NormalizedOntology(const Ontology& kb) {
  for (const auto& a : kb) add(a);
}

std::string NormalizedOntology::name_of(const Concept& c) const {
  if (c.is_top()) return std::string(kTopName);
  if (c.is_atom()) return c.name();
  if (c.is_var()) throw Error("cannot name the nonground concept ?" + c.name());
  return std::string(kDefinitionPrefix) + print_concept(c);
}

void NormalizedOntology::add(const Axiom& axiom) {
  if (!is_ground(axiom)) throw Error("normalization needs ground axioms, got '" + print_axiom(axiom) + "'");
  add_rhs(negative_name(axiom.lhs), axiom.rhs);
}

std::string NormalizedOntology::define(const Concept& c) {
  negative_name(c);
  return positive_name(c);
}

void NormalizedOntology::add_rhs(const std::string& lhs, const Concept& rhs) {
  switch (rhs.kind()) {
    case ConceptKind::Top:
      break;
    case ConceptKind::Atom:
      axioms_.insert(NormalAxiom::subsumption(lhs, rhs.name()));
      break;
    case ConceptKind::Var:
      throw Error("cannot normalize the nonground concept ?" + rhs.name());
    case ConceptKind::Exists:
      axioms_.insert(NormalAxiom::exists_right(lhs, rhs.role(), positive_name(rhs.filler())));
      break;
    case ConceptKind::Conj:
      for (const auto& p : rhs.conjuncts()) add_rhs(lhs, p);
      break;
  }
}

std::string NormalizedOntology::positive_name(const Concept& c) {
  std::string n = name_of(c);
  if (c.is_top() || c.is_atom()) return n;
  table_.emplace(n, c);
  if (positive_done_.insert(c).second) add_rhs(n, c);
  return n;
}

std::string NormalizedOntology::negative_name(const Concept& c) {
  std::string n = name_of(c);
  if (c.is_top() || c.is_atom()) return n;
  table_.emplace(n, c);
  if (!negative_done_.insert(c).second) return n;
  if (c.is_exists()) {
    axioms_.insert(NormalAxiom::exists_left(c.role(), negative_name(c.filler()), n));
    return n;
  }
  // Binarize C1 ⊓ … ⊓ Ck ⊑ N through names for the prefixes C1 ⊓ … ⊓ Ci.
  const auto parts = c.conjuncts();
  std::string acc = negative_name(parts[0]);
  std::vector<Concept> prefix{parts[0]};
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::string next = negative_name(parts[i]);
    prefix.push_back(parts[i]);
    std::string target = n;
    if (i + 1 < parts.size()) {
      Concept pc = Concept::conj(prefix);
      target = name_of(pc);
      table_.emplace(target, pc);
      negative_done_.insert(pc);
    }
    axioms_.insert(NormalAxiom::conjunction(acc, next, target));
    acc = std::move(target);
  }
  return n;
}

NormalizedOntology normalize_ontology(const Ontology& kb) { return NormalizedOntology(kb); }

// --- saturation ------------------------------------------------------------

class Saturator {
 public:
  Saturator(const std::set<NormalAxiom>& axioms, const std::set<std::string>& extra_names) {
    intern(std::string(kTopName));
    for (const auto& n : extra_names) intern(n);
    for (const auto& ax : axioms) {
      intern(ax.lhs);
      intern(ax.rhs);
      if (ax.kind == NormalAxiom::Kind::Conjunction) intern(ax.lhs2);
      if (!ax.role.empty()) role_id(ax.role);
    }
    const auto n = idx_.names_.size();
    told_.resize(n);
    conj_.resize(n);
    ex_right_.resize(n);
    idx_.subsumer_bits_.assign(n, std::vector<std::uint64_t>((n + 63) / 64, 0));
    idx_.subsumer_lists_.resize(n);
    for (auto& per_role : ex_left_) per_role.resize(n);
    for (auto& per_role : preds_) per_role.resize(n);

    for (const auto& ax : axioms) {
      const auto a = id(ax.lhs);
      const auto b = id(ax.rhs);
      switch (ax.kind) {
        case NormalAxiom::Kind::Subsumption:
          told_[a].push_back(b);
          break;
        case NormalAxiom::Kind::Conjunction: {
          const auto a2 = id(ax.lhs2);
          conj_[a].emplace_back(a2, b);
          if (a2 != a) conj_[a2].emplace_back(a, b);
          break;
        }
        case NormalAxiom::Kind::ExistsRight:
          ex_right_[a].emplace_back(role_id(ax.role), b);
          break;
        case NormalAxiom::Kind::ExistsLeft:
          ex_left_[role_id(ax.role)][a].push_back(b);
          break;
      }
    }
  }

  SaturationIndex run() {
    const auto top = id(kTopName);
    for (std::uint32_t a = 0; a < idx_.names_.size(); ++a) {
      add_subsumer(a, a);
      add_subsumer(a, top);
    }
    while (!queue_.empty()) {
      const Item item = queue_.front();
      queue_.pop_front();
      if (item.is_link) {
        process_link(item.role, item.a, item.b);
      } else {
        process_subsumer(item.a, item.b);
      }
    }
    for (std::uint32_t r = 0; r < role_names_.size(); ++r) {
      auto& out = idx_.links_[role_names_[r]];
      for (std::uint32_t b = 0; b < preds_[r].size(); ++b) {
        for (auto a : preds_[r][b]) out.emplace(a, b);
      }
    }
    return std::move(idx_);
  }

 private:
  struct Item {
    bool is_link;
    std::uint32_t role;
    std::uint32_t a;
    std::uint32_t b;
  };

  std::uint32_t intern(const std::string& name) {
    auto [it, inserted] = idx_.ids_.emplace(name, static_cast<std::uint32_t>(idx_.names_.size()));
    if (inserted) idx_.names_.push_back(name);
    return it->second;
  }
  std::uint32_t id(std::string_view name) const { return idx_.ids_.find(name)->second; }
  std::uint32_t role_id(const std::string& role) {
    auto [it, inserted] = role_ids_.emplace(role, static_cast<std::uint32_t>(role_names_.size()));
    if (inserted) {
      role_names_.push_back(role);
      ex_left_.emplace_back();
      preds_.emplace_back();
      link_seen_.emplace_back();
    }
    return it->second;
  }

  bool has(std::uint32_t a, std::uint32_t x) const { return (idx_.subsumer_bits_[a][x / 64] >> (x % 64)) & 1U; }

  void add_subsumer(std::uint32_t a, std::uint32_t x) {
    auto& word = idx_.subsumer_bits_[a][x / 64];
    const std::uint64_t bit = std::uint64_t{1} << (x % 64);
    if (word & bit) return;
    word |= bit;
    idx_.subsumer_lists_[a].push_back(x);
    queue_.push_back({false, 0, a, x});
  }

  void add_link(std::uint32_t r, std::uint32_t a, std::uint32_t b) {
    if (!link_seen_[r].insert((std::uint64_t{a} << 32) | b).second) return;
    queue_.push_back({true, r, a, b});
  }

  // x was added to S(a).
  void process_subsumer(std::uint32_t a, std::uint32_t x) {
    for (auto b : told_[x]) add_subsumer(a, b);  // CR1
    for (auto [other, b] : conj_[x]) {            // CR2
      if (has(a, other)) add_subsumer(a, b);
    }
    for (auto [r, b] : ex_right_[x]) add_link(r, a, b);  // CR3
    for (std::uint32_t r = 0; r < role_names_.size(); ++r) {  // CR4, x as filler subsumer
      const auto& targets = ex_left_[r][x];
      if (targets.empty()) continue;
      const auto& from = preds_[r][a];
      for (std::size_t i = 0; i < from.size(); ++i) {
        for (auto c : targets) add_subsumer(from[i], c);
      }
    }
  }

  // (a, b) was added to R(r).
  void process_link(std::uint32_t r, std::uint32_t a, std::uint32_t b) {
    preds_[r][b].push_back(a);
    const auto& fillers = idx_.subsumer_lists_[b];
    for (std::size_t i = 0; i < fillers.size(); ++i) {  // CR4
      for (auto c : ex_left_[r][fillers[i]]) add_subsumer(a, c);
    }
  }

  SaturationIndex idx_;
  std::map<std::string, std::uint32_t> role_ids_;
  std::vector<std::string> role_names_;
  std::vector<std::vector<std::uint32_t>> told_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> conj_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> ex_right_;
  std::vector<std::vector<std::vector<std::uint32_t>>> ex_left_;  // role -> filler -> results
  std::vector<std::vector<std::vector<std::uint32_t>>> preds_;    // role -> target -> sources
  std::vector<std::unordered_set<std::uint64_t>> link_seen_;
  std::deque<Item> queue_;
};

SaturationIndex saturate(const std::set<NormalAxiom>& axioms, const std::set<std::string>& names) {
  return Saturator(axioms, names).run();
}

bool SaturationIndex::subsumes(std::string_view sub, std::string_view sup) const {
  if (sub == sup || sup == kTopName) return true;
  auto a = ids_.find(sub);
  auto b = ids_.find(sup);
  if (a == ids_.end() || b == ids_.end()) return false;
  return (subsumer_bits_[a->second][b->second / 64] >> (b->second % 64)) & 1U;
}

std::vector<std::string> SaturationIndex::subsumers(std::string_view name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return {std::string(name), std::string(kTopName)};
  std::vector<std::string> out;
  for (auto x : subsumer_lists_[it->second]) out.push_back(names_[x]);
  return out;
}

std::vector<std::pair<std::string, std::string>> SaturationIndex::links(std::string_view role) const {
  std::vector<std::pair<std::string, std::string>> out;
  auto it = links_.find(role);
  if (it == links_.end()) return out;
  for (auto [a, b] : it->second) out.emplace_back(names_[a], names_[b]);
  return out;
}

std::vector<std::string> SaturationIndex::roles() const {
  std::vector<std::string> out;
  for (const auto& [r, _] : links_) out.push_back(r);
  return out;
}

// --- queries ---------------------------------------------------------------

GroundReasoner::GroundReasoner(const Ontology& kb, const ConceptSet& query_concepts) : normalized_(kb) {
  std::set<std::string> names;
  for (const auto& c : query_concepts) names.insert(normalized_.define(c));
  index_ = saturate(normalized_.axioms(), names);
}

bool GroundReasoner::entails(const Concept& sub, const Concept& sup) const {
  if (sup.is_top()) return true;
  return index_.subsumes(normalized_.name_of(sub), normalized_.name_of(sup));
}

bool entails_ground(const Ontology& kb, const Axiom& goal) {
  if (!is_ground(goal)) throw Error("ground entailment needs a ground goal, got '" + print_axiom(goal) + "'");
  GroundReasoner reasoner(kb, {goal.lhs, goal.rhs});
  return reasoner.entails(goal.lhs, goal.rhs);
}

CanonicalInterpretation canonical_interpretation(const Ontology& kb, const ConceptSet& base) {
  if (base.empty()) throw Error("the canonical interpretation needs a nonempty concept base");
  Signature sig = signature(kb);
  for (const auto& c : base) {
    if (!is_ground(c)) throw Error("concept base member '" + print_concept(c) + "' is not ground");
    sig.merge(signature(c));
  }
  ConceptSet queries = base;
  for (const auto& r : sig.roles) {
    for (const auto& d : base) queries.insert(Concept::exists(r, d));
  }
  GroundReasoner reasoner(kb, queries);

  CanonicalInterpretation out;
  std::vector<std::string> domain;
  for (const auto& c : base) {
    domain.push_back("x" + std::to_string(out.tags.size()));
    out.tags.push_back(c);
  }
  out.model = FiniteInterpretation(std::move(domain));
  for (const auto& a : sig.concepts) {
    auto& ext = out.model.concept_extension_mut(a);
    const Concept atom = Concept::atom(a);
    for (std::size_t i = 0; i < out.tags.size(); ++i) {
      if (reasoner.entails(out.tags[i], atom)) ext.insert(i);
    }
  }
  for (const auto& r : sig.roles) {
    auto& succ = out.model.role_extension_mut(r);
    for (std::size_t j = 0; j < out.tags.size(); ++j) {
      const Concept target = Concept::exists(r, out.tags[j]);
      for (std::size_t i = 0; i < out.tags.size(); ++i) {
        if (reasoner.entails(out.tags[i], target)) succ[i].insert(j);
      }
    }
  }
  return out;
}

}  // namespace elx
