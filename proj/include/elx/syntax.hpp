#pragma once

// Concrete syntax for ontologies, goals, concept bases and finite interpretations.
//
//   concept  := primary ('and' primary)*
//   primary  := 'Top' | Name | '?'Var | 'exists' role '.' primary | '(' concept ')'
//   axiom    := concept 'SubClassOf' concept
//
// Ontology files hold one axiom per line; '#' starts a comment. Three sugar
// forms are expanded while parsing:
//
//   chain: r o s SubClassOf t
//   C SubClassOf exists r.Self
//   C SubClassOf (r subRoleOf s)

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "elx/concept.hpp"
#include "elx/error.hpp"
#include "elx/interpretation.hpp"

namespace elx {

struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, const std::string& message);

  const SourceSpan& span() const noexcept { return span_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SourceSpan span_;
  std::string message_;
};

struct ParsedOntology {
  Ontology ontology;
  /// Span of the source line of each axiom, parallel to ontology.axioms().
  std::vector<SourceSpan> spans;
};

ParsedOntology parse_ontology(std::string_view text);

/// Parses a single concept or axiom. Names are checked against `context`
/// so that a role of the ontology cannot be used as a concept and vice versa.
Concept parse_concept(std::string_view text, const Signature* context = nullptr);
Axiom parse_axiom(std::string_view text, const Signature* context = nullptr);

/// One concept per line; blank lines and comments are skipped.
ConceptSet parse_concept_base(std::string_view text, const Signature* context = nullptr);

std::string print_concept(const Concept& c);
std::string print_axiom(const Axiom& a);
std::string print_ontology(const Ontology& kb);
std::string print_concept_set(const ConceptSet& set);

/// Format:
///
///   domain: a b c
///   A: a b
///   r: (a,b) (b,c)
///
/// A line whose values are pairs defines a role; any other line a concept name.
FiniteInterpretation parse_interpretation(std::string_view text);
std::string print_interpretation(const FiniteInterpretation& interpretation);

std::ostream& operator<<(std::ostream& os, const Concept& c);
std::ostream& operator<<(std::ostream& os, const Axiom& a);

/// Reads a whole file; throws elx::Error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace elx
