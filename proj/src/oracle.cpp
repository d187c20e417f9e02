#include "elx/oracle.hpp"

#include <limits>
#include <map>
#include <stdexcept>

#include "elx/error.hpp"
#include "elx/fragments.hpp"

namespace elx {

namespace {

// Postfix program evaluating a concept against one interpretation object.
// Holds pointers into the interpretation's extension maps, so the
// interpretation must outlive the program and keep its name set unchanged.
class CompiledConcept {
 public:
  CompiledConcept(const FiniteInterpretation& interp, const Concept& c, const std::map<std::string, std::size_t>& slots)
      : universe_(interp.size()) {
    emit(interp, c, slots);
  }

  ElementSet eval(std::span<const ElementSet> values, std::vector<ElementSet>& stack) const {
    stack.clear();
    for (const auto& in : code_) {
      switch (in.op) {
        case Op::Top:
          stack.push_back(ElementSet::full(universe_));
          break;
        case Op::Set:
          stack.push_back(in.set != nullptr ? *in.set : ElementSet(universe_));
          break;
        case Op::Var:
          stack.push_back(values[in.index]);
          break;
        case Op::Exists: {
          ElementSet result(universe_);
          if (in.succ != nullptr && !stack.back().empty()) {
            for (std::size_t d = 0; d < universe_; ++d) {
              if ((*in.succ)[d].intersects(stack.back())) result.insert(d);
            }
          }
          stack.back() = std::move(result);
          break;
        }
        case Op::Conj:
          for (std::size_t i = 1; i < in.index; ++i) {
            ElementSet top = std::move(stack.back());
            stack.pop_back();
            stack.back() &= top;
          }
          break;
      }
    }
    return std::move(stack.back());
  }

 private:
  enum class Op { Top, Set, Var, Exists, Conj };
  struct Instr {
    Op op;
    const ElementSet* set = nullptr;
    const FiniteInterpretation::Successors* succ = nullptr;
    std::size_t index = 0;  // variable slot, or arity of a conjunction
  };

  void emit(const FiniteInterpretation& interp, const Concept& c, const std::map<std::string, std::size_t>& slots) {
    switch (c.kind()) {
      case ConceptKind::Top:
        code_.push_back({Op::Top});
        break;
      case ConceptKind::Atom:
        code_.push_back({Op::Set, interp.find_concept(c.name())});
        break;
      case ConceptKind::Var: {
        auto it = slots.find(c.name());
        if (it == slots.end()) throw UnboundVariableError(c.name());
        code_.push_back({Op::Var, nullptr, nullptr, it->second});
        break;
      }
      case ConceptKind::Exists:
        emit(interp, c.filler(), slots);
        code_.push_back({Op::Exists, nullptr, interp.find_role(c.role())});
        break;
      case ConceptKind::Conj:
        for (const auto& p : c.conjuncts()) emit(interp, p, slots);
        code_.push_back({Op::Conj, nullptr, nullptr, c.conjuncts().size()});
        break;
    }
  }

  std::size_t universe_;
  std::vector<Instr> code_;
};

std::map<std::string, std::size_t> slot_map(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < names.size(); ++i) out.emplace(names[i], i);
  return out;
}

// Checks one axiom against all valuations of a mode.
class AxiomChecker {
 public:
  AxiomChecker(const FiniteInterpretation& interp, const Axiom& a, ValuationMode mode, std::uint64_t ceiling)
      : universe_(interp.size()), mode_(mode) {
    const auto vs = vars(a);
    variables_.assign(vs.begin(), vs.end());
    const auto slots = slot_map(variables_);
    lhs_.emplace(interp, a.lhs, slots);
    rhs_.emplace(interp, a.rhs, slots);
    if (mode == ValuationMode::Singleton) {
      if (!singleton_applicable(a)) {
        throw Error(
            "singleton valuations are only complete for range-restricted axioms with a linear lhs");
      }
      if (universe_ == 0) throw Error("singleton valuations need a nonempty domain");
      radix_ = universe_;
    } else {
      if (!variables_.empty() && universe_ >= 63) throw ResourceLimitError("too many subsets to enumerate valuations");
      radix_ = std::size_t{1} << universe_;
    }
    long double total = 1;
    for (std::size_t i = 0; i < variables_.size(); ++i) total *= static_cast<long double>(radix_);
    if (total > static_cast<long double>(ceiling)) throw ResourceLimitError("valuation enumeration exceeds the state ceiling");
  }

  const std::vector<std::string>& variables() const { return variables_; }

  // Values of the first violating valuation, if any.
  std::optional<std::vector<ElementSet>> violation(std::vector<ElementSet>& stack) const {
    std::vector<std::size_t> digits(variables_.size(), 0);
    std::vector<ElementSet> values(variables_.size());
    for (;;) {
      for (std::size_t i = 0; i < digits.size(); ++i) values[i] = value_of(digits[i]);
      ElementSet left = lhs_->eval(values, stack);
      if (!left.empty()) {
        ElementSet right = rhs_->eval(values, stack);
        if (!left.is_subset_of(right)) return values;
      }
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == radix_) digits[i++] = 0;
      if (i == digits.size()) return std::nullopt;
    }
  }

 private:
  ElementSet value_of(std::size_t digit) const {
    return mode_ == ValuationMode::Singleton ? ElementSet::singleton(universe_, digit)
                                             : ElementSet::from_mask(universe_, digit);
  }

  std::size_t universe_;
  ValuationMode mode_;
  std::size_t radix_ = 1;
  std::vector<std::string> variables_;
  std::optional<CompiledConcept> lhs_;
  std::optional<CompiledConcept> rhs_;
};

Valuation to_valuation(const std::vector<std::string>& names, const std::vector<ElementSet>& values) {
  Valuation eta;
  for (std::size_t i = 0; i < names.size(); ++i) eta.emplace(names[i], values[i]);
  return eta;
}

ValuationMode auto_mode(const FiniteInterpretation& interp, const Axiom& a) {
  return interp.size() > 0 && singleton_applicable(a) ? ValuationMode::Singleton : ValuationMode::All;
}

}  // namespace

ElementSet eval_concept(const FiniteInterpretation& interp, const Valuation& eta, const Concept& c) {
  std::vector<std::string> names;
  std::vector<ElementSet> values;
  for (const auto& [name, set] : eta) {
    if (set.universe() != interp.size()) throw Error("valuation of ?" + name + " is over a different domain");
    names.push_back(name);
    values.push_back(set);
  }
  std::vector<ElementSet> stack;
  return CompiledConcept(interp, c, slot_map(names)).eval(values, stack);
}

bool satisfies(const FiniteInterpretation& interp, const Valuation& eta, const Axiom& a) {
  return eval_concept(interp, eta, a.lhs).is_subset_of(eval_concept(interp, eta, a.rhs));
}

bool singleton_applicable(const Axiom& a) { return check_range_restricted(a) && check_linear(a.lhs); }

std::optional<Valuation> find_violation(const FiniteInterpretation& interp, const Axiom& a, ValuationMode mode,
                                        std::uint64_t ceiling) {
  AxiomChecker checker(interp, a, mode, ceiling);
  std::vector<ElementSet> stack;
  auto values = checker.violation(stack);
  if (!values) return std::nullopt;
  return to_valuation(checker.variables(), *values);
}

bool satisfies_so(const FiniteInterpretation& interp, const Axiom& a, ValuationMode mode) {
  return !find_violation(interp, a, mode).has_value();
}

KbCheck satisfies_so_kb(const FiniteInterpretation& interp, const Ontology& kb) {
  for (const auto& a : kb) {
    if (auto eta = find_violation(interp, a, auto_mode(interp, a))) {
      return {false, a, std::move(eta)};
    }
  }
  return {};
}

std::optional<Countermodel> refute_entailment(const Ontology& kb, const Axiom& goal, int max_domain,
                                              std::uint64_t ceiling) {
  if (max_domain < 1) throw Error("the maximal domain size must be at least 1");
  Signature sig = signature(kb);
  sig.merge(signature(goal));
  const std::vector<std::string> concepts(sig.concepts.begin(), sig.concepts.end());
  const std::vector<std::string> roles(sig.roles.begin(), sig.roles.end());

  // The ceiling is checked per size, so small countermodels are still found.
  long double total = 0;
  for (int n = 1; n <= max_domain; ++n) {
    const auto wide_bits =
        static_cast<long double>(n) * concepts.size() + static_cast<long double>(n) * n * roles.size();
    if (wide_bits >= 63) throw ResourceLimitError("countermodel search exceeds the state ceiling");
    total += static_cast<long double>(std::uint64_t{1} << static_cast<int>(wide_bits));
    if (total > static_cast<long double>(ceiling)) {
      throw ResourceLimitError("countermodel search exceeds the state ceiling at domain size " + std::to_string(n));
    }
    std::vector<std::string> domain;
    for (int i = 0; i < n; ++i) domain.push_back(std::string(1, static_cast<char>('a' + i % 26)) + (i >= 26 ? std::to_string(i / 26) : ""));
    FiniteInterpretation interp(std::move(domain));
    std::vector<ElementSet*> concept_ext;
    std::vector<FiniteInterpretation::Successors*> role_ext;
    for (const auto& c : concepts) concept_ext.push_back(&interp.concept_extension_mut(c));
    for (const auto& r : roles) role_ext.push_back(&interp.role_extension_mut(r));

    AxiomChecker goal_check(interp, goal, auto_mode(interp, goal), ceiling);
    std::vector<AxiomChecker> kb_checks;
    for (const auto& a : kb) kb_checks.emplace_back(interp, a, auto_mode(interp, a), ceiling);

    const auto un = static_cast<std::size_t>(n);
    const std::size_t bits = un * concepts.size() + un * un * roles.size();
    const std::uint64_t count = std::uint64_t{1} << bits;
    const std::uint64_t row_mask = (std::uint64_t{1} << un) - 1;
    std::vector<ElementSet> stack;
    for (std::uint64_t state = 0; state < count; ++state) {
      std::uint64_t s = state;
      for (auto* ext : concept_ext) {
        *ext = ElementSet::from_mask(un, s & row_mask);
        s >>= un;
      }
      for (auto* succ : role_ext) {
        for (std::size_t d = 0; d < un; ++d) {
          (*succ)[d] = ElementSet::from_mask(un, s & row_mask);
          s >>= un;
        }
      }
      auto goal_violation = goal_check.violation(stack);
      if (!goal_violation) continue;
      bool model = true;
      for (const auto& check : kb_checks) {
        if (check.violation(stack)) {
          model = false;
          break;
        }
      }
      if (model) return Countermodel{interp, to_valuation(goal_check.variables(), *goal_violation)};
    }
  }
  return std::nullopt;
}

namespace {

FiniteInterpretation::Successors compose(const FiniteInterpretation& interp, std::span<const std::string> roles) {
  const auto n = interp.size();
  FiniteInterpretation::Successors result(n, ElementSet(n));
  for (std::size_t d = 0; d < n; ++d) result[d].insert(d);
  for (const auto& r : roles) {
    const auto* succ = interp.find_role(r);
    FiniteInterpretation::Successors next(n, ElementSet(n));
    if (succ != nullptr) {
      for (std::size_t d = 0; d < n; ++d) {
        for (auto e : result[d].elements()) next[d] |= (*succ)[e];
      }
    }
    result = std::move(next);
  }
  return result;
}

}  // namespace

bool check_role_composition(const FiniteInterpretation& interp, std::span<const std::string> roles_lhs,
                            std::span<const std::string> roles_rhs) {
  if (roles_lhs.empty() || roles_rhs.empty()) throw Error("role compositions need at least one role");
  const auto left = compose(interp, roles_lhs);
  const auto right = compose(interp, roles_rhs);
  for (std::size_t d = 0; d < interp.size(); ++d) {
    if (!left[d].is_subset_of(right[d])) return false;
  }
  return true;
}

std::string format_valuation(const FiniteInterpretation& interp, const Valuation& eta) {
  std::string out;
  for (const auto& [name, set] : eta) {
    if (!out.empty()) out += ", ";
    out += "η(?" + name + ")=" + interp.format_set(set);
  }
  return out;
}

}  // namespace elx
