#pragma once

// Syntactic fragment membership: range restriction, linearity, safety, gelo and gelt.

#include <string>
#include <vector>

#include "elx/concept.hpp"
#include "elx/error.hpp"

namespace elx {

struct Violation {
  std::string reason;
  Concept offender;
};

struct FragmentReport {
  bool range_restricted = true;
  bool lhs_linear = true;
  bool rhs_safe = true;
  bool is_gelo = true;
  bool is_gelt = true;
  std::vector<Violation> violations;
};

/// Every variable of the rhs occurs in the lhs.
bool check_range_restricted(const Axiom& a);
/// No variable occurs twice.
bool check_linear(const Concept& c);
/// Variables occur only as immediate fillers of existential restrictions.
bool check_safe(const Concept& c);

FragmentReport classify(const Axiom& a);

/// Thrown when an operation requires gelo (or gelt) input.
class FragmentError : public Error {
 public:
  FragmentError(const std::string& what, Axiom axiom, FragmentReport report)
      : Error(what), axiom_(std::move(axiom)), report_(std::move(report)) {}

  const Axiom& axiom() const noexcept { return axiom_; }
  const FragmentReport& report() const noexcept { return report_; }

 private:
  Axiom axiom_;
  FragmentReport report_;
};

/// Throws FragmentError naming the first axiom outside gelo.
void require_gelo(const Ontology& kb);
/// Throws FragmentError naming the first axiom outside gelt.
void require_gelt(const Ontology& kb);

}  // namespace elx
