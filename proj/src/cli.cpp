#include "elx/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "elx/entailment.hpp"
#include "elx/error.hpp"
#include "elx/expansion.hpp"
#include "elx/fragments.hpp"
#include "elx/oracle.hpp"
#include "elx/saturation.hpp"
#include "elx/syntax.hpp"

namespace elx::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::string file;
  std::string model_file;
  std::string goal;
  std::string schema_base;
  int max_level = kDefaultLevelBudget;
  int max_domain = 3;
};

// Input problems reported with exit code 3.
class InputError : public Error {
 public:
  using Error::Error;
};

ParsedOntology load_ontology(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_ontology(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Axiom load_goal(const std::string& text, const Ontology& kb) {
  const Signature sig = signature(kb);
  try {
    return parse_axiom(text, &sig);
  } catch (const ParseError& e) {
    throw InputError(std::string("goal: ") + e.what());
  }
}

json concept_list(const ConceptSet& set) {
  json out = json::array();
  for (const auto& c : set) out.push_back(print_concept(c));
  return out;
}

json axiom_list(const Ontology& kb) {
  json out = json::array();
  for (const auto& a : kb) out.push_back(print_axiom(a));
  return out;
}

json valuation_json(const FiniteInterpretation& interp, const Valuation& eta) {
  json out = json::object();
  for (const auto& [name, set] : eta) {
    json elems = json::array();
    for (auto e : set.elements()) elems.push_back(interp.element(e));
    out["?" + name] = elems;
  }
  return out;
}

json interpretation_json(const FiniteInterpretation& interp) {
  json concepts = json::object();
  for (const auto& name : interp.concept_names()) {
    json elems = json::array();
    for (auto e : interp.concept_extension(name).elements()) elems.push_back(interp.element(e));
    concepts[name] = elems;
  }
  json roles = json::object();
  for (const auto& role : interp.role_names()) {
    json pairs = json::array();
    for (auto [d, e] : interp.role_pairs(role)) pairs.push_back({interp.element(d), interp.element(e)});
    roles[role] = pairs;
  }
  return {{"domain", interp.domain()}, {"concepts", concepts}, {"roles", roles}};
}

std::string fragment_label(const FragmentReport& r) {
  if (r.is_gelt) return "gelt";
  if (r.is_gelo) return "gelo";
  return "none";
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const auto parsed = load_ontology(opt.file);
  json axioms = json::array();
  json violations = json::array();
  int outside = 0;
  const auto& list = parsed.ontology.axioms();
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto report = classify(list[i]);
    const int line = parsed.spans[i].line;
    if (!report.is_gelo) ++outside;
    json v = json::array();
    for (const auto& viol : report.violations) {
      json entry = {{"line", line},
                    {"axiom", print_axiom(list[i])},
                    {"reason", viol.reason},
                    {"offender", print_concept(viol.offender)}};
      v.push_back(entry);
      violations.push_back(entry);
    }
    axioms.push_back({{"line", line},
                      {"axiom", print_axiom(list[i])},
                      {"fragment", fragment_label(report)},
                      {"range_restricted", report.range_restricted},
                      {"lhs_linear", report.lhs_linear},
                      {"rhs_safe", report.rhs_safe},
                      {"gelo", report.is_gelo},
                      {"gelt", report.is_gelt},
                      {"violations", v}});
    if (!opt.json) {
      out << "line " << line << "  " << fragment_label(report) << "  " << print_axiom(list[i]) << "\n";
      for (const auto& viol : report.violations) {
        out << "    " << viol.reason << " (in " << print_concept(viol.offender) << ")\n";
      }
    }
  }
  const bool valid = outside == 0;
  if (opt.json) {
    out << json{{"command", "validate"},
                {"status", valid ? "VALID" : "INVALID"},
                {"axioms", axioms},
                {"violations", violations}}
               .dump(2)
        << "\n";
  } else {
    out << list.size() << (list.size() == 1 ? " axiom, " : " axioms, ") << outside << " outside gelo\n";
  }
  return valid ? kAffirmative : kNegative;
}

int cmd_entails(const Options& opt, std::ostream& out) {
  const auto kb = load_ontology(opt.file).ontology;
  const auto goal = load_goal(opt.goal, kb);

  if (!opt.schema_base.empty()) {
    Signature sig = signature(kb);
    sig.merge(signature(goal));
    ConceptSet base;
    try {
      base = parse_concept_base(read_file(opt.schema_base), &sig);
    } catch (const ParseError& e) {
      throw InputError(opt.schema_base + ": " + e.what());
    }
    const bool entailed = check_schema(kb, goal, base);
    const auto status = entailed ? Status::Entailed : Status::NotEntailed;
    if (opt.json) {
      out << json{{"command", "entails"},
                  {"status", to_string(status)},
                  {"definitive", true},
                  {"schema_base", concept_list(base)}}
                 .dump(2)
          << "\n";
    } else {
      out << to_string(status) << " over schema base " << print_concept_set(base) << "\n";
    }
    return entailed ? kAffirmative : kNegative;
  }

  EntailmentVerdict verdict;
  try {
    verdict = decide(kb, goal, opt.max_level);
  } catch (const FragmentError& e) {
    std::string message = "refused: '" + print_axiom(e.axiom()) + "' is outside gelo";
    for (const auto& v : e.report().violations) message += "; " + v.reason;
    throw InputError(message);
  }

  if (opt.json) {
    json levels = json::array();
    for (const auto& h : verdict.levels) levels.push_back(concept_list(h));
    json fresh = json::object();
    for (const auto& [v, name] : verdict.fresh_names) fresh["?" + v] = name;
    json report = {{"command", "entails"},
                   {"status", to_string(verdict.status)},
                   {"level", verdict.level},
                   {"definitive", verdict.definitive},
                   {"goal", print_axiom(verdict.goal)},
                   {"fresh_names", fresh},
                   {"levels", levels},
                   {"witness", axiom_list(verdict.witness)}};
    if (verdict.status == Status::NotEntailed) {
      report["counterexample"] = interpretation_json(canonical_countermodel(verdict).model);
    }
    out << report.dump(2) << "\n";
  } else {
    out << to_string(verdict.status) << " level " << verdict.level
        << (verdict.definitive ? " (definitive)" : " (level budget exhausted before a fixpoint)") << "\n";
    for (const auto& [v, name] : verdict.fresh_names) out << "  ?" << v << " read as fresh name " << name << "\n";
    out << "  base: " << print_concept_set(verdict.base()) << "\n";
  }
  switch (verdict.status) {
    case Status::Entailed:
      return kAffirmative;
    case Status::NotEntailed:
      return kNegative;
    case Status::Unknown:
      return kUnknown;
  }
  return kUnknown;
}

struct Expanded {
  GeneralizedGoal goal;
  ExpansionTrace trace;
};

Expanded run_expansion(const Ontology& kb, const Options& opt) {
  if (opt.max_level < 0) throw InputError("--max-level must be nonnegative");
  auto goal = generalize_goal(load_goal(opt.goal, kb), kb);
  auto trace = expansion_base(kb, goal.goal, opt.max_level);
  return {std::move(goal), std::move(trace)};
}

int cmd_expand(const Options& opt, std::ostream& out) {
  const auto kb = load_ontology(opt.file).ontology;
  const auto [goal, trace] = run_expansion(kb, opt);
  if (opt.json) {
    json levels = json::array();
    for (const auto& h : trace.levels) levels.push_back(concept_list(h));
    out << json{{"command", "expand"},
                {"status", trace.fixpoint_reached ? "FIXPOINT" : "BUDGET_EXHAUSTED"},
                {"fixpoint_reached", trace.fixpoint_reached},
                {"levels", levels},
                {"grounded", axiom_list(trace.grounded)}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& [v, name] : goal.fresh_names) out << "?" << v << " read as fresh name " << name << "\n";
    for (std::size_t i = 0; i < trace.levels.size(); ++i) {
      out << "H" << i << " = " << print_concept_set(trace.levels[i]) << "\n";
    }
    out << "fixpoint_reached = " << (trace.fixpoint_reached ? "true" : "false") << "\n";
    out << "grounded:\n" << print_ontology(trace.grounded);
  }
  return trace.fixpoint_reached ? kAffirmative : kUnknown;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const auto kb = load_ontology(opt.file).ontology;
  const auto [goal, trace] = run_expansion(kb, opt);
  Signature sig = signature(kb);
  sig.merge(signature(goal.goal));
  const GroundReasoner reasoner(trace.grounded, {});
  json pairs = json::array();
  for (const auto& a : sig.concepts) {
    for (const auto& b : sig.concepts) {
      if (a == b || !reasoner.entails(Concept::atom(a), Concept::atom(b))) continue;
      pairs.push_back({a, b});
      if (!opt.json) out << a << " SubClassOf " << b << "\n";
    }
  }
  if (opt.json) {
    out << json{{"command", "classify"},
                {"status", trace.fixpoint_reached ? "FIXPOINT" : "BUDGET_EXHAUSTED"},
                {"fixpoint_reached", trace.fixpoint_reached},
                {"subsumptions", pairs}}
               .dump(2)
        << "\n";
  } else {
    if (pairs.empty()) out << "# no subsumptions between distinct concept names\n";
    if (!trace.fixpoint_reached) out << "# level budget exhausted before a fixpoint; the list may be incomplete\n";
  }
  return trace.fixpoint_reached ? kAffirmative : kUnknown;
}

int cmd_refute(const Options& opt, std::ostream& out) {
  const auto kb = load_ontology(opt.file).ontology;
  const auto goal = load_goal(opt.goal, kb);
  if (opt.max_domain < 1) throw InputError("--max-domain must be at least 1");
  const auto found = refute_entailment(kb, goal, opt.max_domain);
  if (opt.json) {
    json report = {{"command", "oracle refute"},
                   {"status", found ? "COUNTERMODEL" : "NO_COUNTERMODEL"},
                   {"max_domain", opt.max_domain}};
    if (found) {
      report["counterexample"] = interpretation_json(found->model);
      report["counterexample"]["valuation"] = valuation_json(found->model, found->valuation);
    } else {
      report["counterexample"] = nullptr;
    }
    out << report.dump(2) << "\n";
  } else if (found) {
    out << "COUNTERMODEL with " << found->model.size() << " element" << (found->model.size() == 1 ? "" : "s") << "\n";
    out << print_interpretation(found->model);
    out << "goal violated";
    if (!found->valuation.empty()) out << " at " << format_valuation(found->model, found->valuation);
    out << "\n";
  } else {
    out << "NO COUNTERMODEL up to " << opt.max_domain << " elements (not a proof of entailment)\n";
  }
  return found ? kNegative : kUnknown;
}

int cmd_check_model(const Options& opt, std::ostream& out) {
  FiniteInterpretation model;
  try {
    model = parse_interpretation(read_file(opt.model_file));
  } catch (const ParseError& e) {
    throw InputError(opt.model_file + ": " + e.what());
  }
  const auto kb = load_ontology(opt.file).ontology;

  json violations = json::array();
  bool ok = true;
  auto check = [&](const Axiom& a, bool is_goal) {
    const auto mode = model.size() > 0 && singleton_applicable(a) ? ValuationMode::Singleton : ValuationMode::All;
    const auto eta = find_violation(model, a, mode);
    const std::string prefix = is_goal ? "goal " : "";
    if (!eta) {
      if (!opt.json) out << prefix << "satisfied: " << print_axiom(a) << "\n";
      return;
    }
    ok = false;
    violations.push_back({{"axiom", print_axiom(a)}, {"goal", is_goal}, {"valuation", valuation_json(model, *eta)}});
    if (!opt.json) {
      out << prefix << "violated: " << print_axiom(a);
      if (!eta->empty()) out << " at " << format_valuation(model, *eta);
      out << "\n";
    }
  };
  for (const auto& a : kb) check(a, false);
  if (!opt.goal.empty()) check(load_goal(opt.goal, kb), true);

  if (opt.json) {
    out << json{{"command", "oracle check-model"},
                {"status", ok ? "SATISFIED" : "VIOLATED"},
                {"violations", violations}}
               .dump(2)
        << "\n";
  }
  return ok ? kAffirmative : kNegative;
}

int cmd_desugar(const Options& opt, std::ostream& out) {
  const auto kb = load_ontology(opt.file).ontology;
  if (opt.json) {
    out << json{{"command", "desugar"}, {"axioms", axiom_list(kb)}}.dump(2) << "\n";
  } else {
    out << print_ontology(kb);
  }
  return kAffirmative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Reasoner for EL ontologies with concept variables", "elx"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Print a JSON report");

  auto* validate = app.add_subcommand("validate", "Report the fragment of every axiom");
  validate->add_option("FILE", opt.file, "Ontology file")->required();

  auto* entails = app.add_subcommand("entails", "Decide whether the ontology entails a goal");
  entails->add_option("FILE", opt.file, "Ontology file")->required();
  entails->add_option("--goal", opt.goal, "Goal axiom")->required();
  entails->add_option("--max-level", opt.max_level, "Expansion level budget")->check(CLI::NonNegativeNumber);
  entails->add_option("--schema-base", opt.schema_base, "Ground over this concept base instead");

  auto* expand = app.add_subcommand("expand", "Print the expansion levels for a goal");
  expand->add_option("FILE", opt.file, "Ontology file")->required();
  expand->add_option("--goal", opt.goal, "Goal axiom")->required();
  expand->add_option("--max-level", opt.max_level, "Expansion level budget")->check(CLI::NonNegativeNumber);

  auto* classify_cmd = app.add_subcommand("classify", "Subsumptions between concept names after expansion");
  classify_cmd->add_option("FILE", opt.file, "Ontology file")->required();
  classify_cmd->add_option("--goal", opt.goal, "Goal axiom")->required();
  classify_cmd->add_option("--max-level", opt.max_level, "Expansion level budget")->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle", "Brute-force second-order semantics");
  oracle->require_subcommand(1);
  auto* refute = oracle->add_subcommand("refute", "Search small countermodels");
  refute->add_option("FILE", opt.file, "Ontology file")->required();
  refute->add_option("--goal", opt.goal, "Goal axiom")->required();
  refute->add_option("--max-domain", opt.max_domain, "Largest domain size")->check(CLI::PositiveNumber);
  auto* check_model = oracle->add_subcommand("check-model", "Check an interpretation against an ontology");
  check_model->add_option("MODELFILE", opt.model_file, "Interpretation file")->required();
  check_model->add_option("FILE", opt.file, "Ontology file")->required();
  check_model->add_option("--goal", opt.goal, "Goal axiom expected to hold");

  auto* desugar_cmd = app.add_subcommand("desugar", "Print the ontology with sugar expanded");
  desugar_cmd->add_option("FILE", opt.file, "Ontology file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAffirmative : kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, out);
    if (entails->parsed()) return cmd_entails(opt, out);
    if (expand->parsed()) return cmd_expand(opt, out);
    if (classify_cmd->parsed()) return cmd_classify(opt, out);
    if (refute->parsed()) return cmd_refute(opt, out);
    if (check_model->parsed()) return cmd_check_model(opt, out);
    if (desugar_cmd->parsed()) return cmd_desugar(opt, out);
  } catch (const ResourceLimitError& e) {
    err << "elx: resource limit: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "elx: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace elx::cli
