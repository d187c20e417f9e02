#include "elx/fragments.hpp"

#include "elx/syntax.hpp"

namespace elx {

namespace {

// Collects the smallest subterm around each unsafe variable occurrence.
void unsafe_occurrences(const Concept& c, bool under_exists, std::vector<Concept>& out) {
  switch (c.kind()) {
    case ConceptKind::Var:
      if (!under_exists) out.push_back(c);
      break;
    case ConceptKind::Exists:
      unsafe_occurrences(c.filler(), true, out);
      break;
    case ConceptKind::Conj:
      for (const auto& p : c.conjuncts()) {
        if (p.is_var()) {
          out.push_back(c);
        } else {
          unsafe_occurrences(p, false, out);
        }
      }
      break;
    default:
      break;
  }
}

}  // namespace

bool check_range_restricted(const Axiom& a) {
  const auto left = vars(a.lhs);
  for (const auto& v : vars(a.rhs)) {
    if (!left.contains(v)) return false;
  }
  return true;
}

bool check_linear(const Concept& c) {
  for (const auto& [_, n] : var_occurrences(c)) {
    if (n > 1) return false;
  }
  return true;
}

bool check_safe(const Concept& c) {
  std::vector<Concept> bad;
  unsafe_occurrences(c, false, bad);
  return bad.empty();
}

FragmentReport classify(const Axiom& a) {
  FragmentReport r;
  const auto left = vars(a.lhs);
  for (const auto& v : vars(a.rhs)) {
    if (!left.contains(v)) {
      r.range_restricted = false;
      r.violations.push_back({"not range restricted: ?" + v + " occurs on the right but not on the left", Concept::var(v)});
    }
  }
  for (const auto& [v, n] : var_occurrences(a.lhs)) {
    if (n > 1) {
      r.lhs_linear = false;
      r.violations.push_back({"lhs not linear: ?" + v + " occurs " + (n == 2 ? std::string("twice") : std::to_string(n) + " times"),
                              Concept::var(v)});
    }
  }
  std::vector<Concept> unsafe;
  unsafe_occurrences(a.rhs, false, unsafe);
  for (const auto& u : unsafe) {
    r.rhs_safe = false;
    r.violations.push_back({"rhs not safe: variables may only occur as 'exists r.?X'", u});
  }
  r.is_gelo = r.range_restricted && r.lhs_linear && r.rhs_safe;

  // Positive occurrences are exactly the rhs subterms.
  bool fillers_ok = true;
  for (const auto& c : subconcepts(a.rhs)) {
    if (!c.is_exists()) continue;
    const auto& d = c.filler();
    if (!d.is_var() && !is_ground(d)) {
      fillers_ok = false;
      r.violations.push_back({"not gelt: positive filler of " + print_concept(c) + " is neither a variable nor ground", c});
    }
  }
  r.is_gelt = r.is_gelo && fillers_ok;
  return r;
}

namespace {

void require(const Ontology& kb, bool gelt) {
  for (const auto& a : kb) {
    auto report = classify(a);
    if (gelt ? report.is_gelt : report.is_gelo) continue;
    std::string msg = "axiom '" + print_axiom(a) + "' is not in " + (gelt ? "gelt" : "gelo");
    for (const auto& v : report.violations) msg += "; " + v.reason;
    throw FragmentError(msg, a, std::move(report));
  }
}

}  // namespace

void require_gelo(const Ontology& kb) { require(kb, false); }
void require_gelt(const Ontology& kb) { require(kb, true); }

}  // namespace elx
