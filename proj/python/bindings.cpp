#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "elx/cli.hpp"
#include "elx/entailment.hpp"
#include "elx/error.hpp"
#include "elx/expansion.hpp"
#include "elx/fragments.hpp"
#include "elx/oracle.hpp"
#include "elx/syntax.hpp"

namespace py = pybind11;
using namespace elx;

namespace {

Ontology ontology_of(const std::string& text) { return parse_ontology(text).ontology; }

Axiom goal_of(const std::string& text, const Ontology& kb) {
  const Signature sig = signature(kb);
  return parse_axiom(text, &sig);
}

std::vector<std::string> printed(const ConceptSet& set) {
  std::vector<std::string> out;
  for (const auto& c : set) out.push_back(print_concept(c));
  return out;
}

std::vector<std::string> printed(const Ontology& kb) {
  std::vector<std::string> out;
  for (const auto& a : kb) out.push_back(print_axiom(a));
  return out;
}

py::dict interpretation_dict(const FiniteInterpretation& I) {
  py::dict concepts, roles;
  for (const auto& name : I.concept_names()) {
    py::list members;
    for (auto e : I.concept_extension(name).elements()) members.append(I.element(e));
    concepts[py::str(name)] = members;
  }
  for (const auto& role : I.role_names()) {
    py::list pairs;
    for (const auto& [d, e] : I.role_pairs(role)) pairs.append(py::make_tuple(I.element(d), I.element(e)));
    roles[py::str(role)] = pairs;
  }
  py::dict out;
  out["domain"] = I.domain();
  out["concepts"] = concepts;
  out["roles"] = roles;
  return out;
}

py::dict fragment_report(const std::string& axiom) {
  const auto r = classify(parse_axiom(axiom));
  py::list violations;
  for (const auto& v : r.violations) violations.append(py::make_tuple(v.reason, print_concept(v.offender)));
  py::dict out;
  out["range_restricted"] = r.range_restricted;
  out["lhs_linear"] = r.lhs_linear;
  out["rhs_safe"] = r.rhs_safe;
  out["gelo"] = r.is_gelo;
  out["gelt"] = r.is_gelt;
  out["violations"] = violations;
  return out;
}

py::dict decide_text(const std::string& ontology, const std::string& goal, int max_level) {
  const auto kb = ontology_of(ontology);
  const auto v = decide(kb, goal_of(goal, kb), max_level);
  py::list levels;
  for (const auto& l : v.levels) levels.append(printed(l));
  py::dict out;
  out["status"] = to_string(v.status);
  out["level"] = v.level;
  out["definitive"] = v.definitive;
  out["goal"] = print_axiom(v.goal);
  out["fresh_names"] = v.fresh_names;
  out["levels"] = levels;
  out["witness"] = printed(v.witness);
  if (v.status == Status::NotEntailed) {
    out["counterexample"] = interpretation_dict(canonical_countermodel(v).model);
  } else {
    out["counterexample"] = py::none();
  }
  return out;
}

bool check_schema_text(const std::string& ontology, const std::string& goal, const std::vector<std::string>& base) {
  const auto kb = ontology_of(ontology);
  const Signature sig = signature(kb);
  ConceptSet h;
  for (const auto& c : base) h.insert(parse_concept(c, &sig));
  return check_schema(kb, goal_of(goal, kb), h);
}

py::dict expand_text(const std::string& ontology, const std::string& goal, int max_level) {
  const auto kb = ontology_of(ontology);
  const auto trace = expansion_base(kb, goal_of(goal, kb), max_level);
  py::list levels;
  for (const auto& l : trace.levels) levels.append(printed(l));
  py::dict out;
  out["levels"] = levels;
  out["fixpoint_reached"] = trace.fixpoint_reached;
  out["grounded"] = printed(trace.grounded);
  return out;
}

py::list check_model_text(const std::string& model, const std::string& ontology) {
  const auto I = parse_interpretation(model);
  py::list out;
  for (const auto& a : ontology_of(ontology)) {
    const ValuationMode mode = singleton_applicable(a) ? ValuationMode::Singleton : ValuationMode::All;
    if (const auto eta = find_violation(I, a, mode)) {
      out.append(py::make_tuple(print_axiom(a), format_valuation(I, *eta)));
    }
  }
  return out;
}

py::object refute_text(const std::string& ontology, const std::string& goal, int max_domain) {
  const auto kb = ontology_of(ontology);
  const auto found = refute_entailment(kb, goal_of(goal, kb), max_domain);
  if (!found) return py::none();
  py::dict out = interpretation_dict(found->model);
  out["valuation"] = format_valuation(found->model, found->valuation);
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_elx, m) {
  m.doc() = "EL reasoning with concept variables";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<FragmentError>(m, "FragmentError", error.ptr());
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", error.ptr());

  m.def("normalize_concept", [](const std::string& c) { return print_concept(parse_concept(c)); }, py::arg("concept"));
  m.def("desugar", [](const std::string& text) { return print_ontology(ontology_of(text)); }, py::arg("ontology"));
  m.def("classify_axiom", &fragment_report, py::arg("axiom"));
  m.def("decide", &decide_text, py::arg("ontology"), py::arg("goal"), py::arg("max_level") = kDefaultLevelBudget);
  m.def("entails_ground", [](const std::string& ontology, const std::string& goal) {
    const auto kb = ontology_of(ontology);
    return entails_ground(kb, goal_of(goal, kb));
  }, py::arg("ontology"), py::arg("goal"));
  m.def("check_schema", &check_schema_text, py::arg("ontology"), py::arg("goal"), py::arg("base"));
  m.def("expand", &expand_text, py::arg("ontology"), py::arg("goal"), py::arg("max_level") = kDefaultLevelBudget);
  m.def("check_model", &check_model_text, py::arg("model"), py::arg("ontology"));
  m.def("refute", &refute_text, py::arg("ontology"), py::arg("goal"), py::arg("max_domain") = 3);
  m.def("run_cli", &run_cli, py::arg("args"));
}
