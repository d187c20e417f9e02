// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <iomanip>
#include <functional>
#include <numeric>
#include <iostream>
#include <sstream>

#include "elx/cli.hpp"
#include "elx/entailment.hpp"
#include "elx/expansion.hpp"
#include "elx/fragments.hpp"
#include "elx/oracle.hpp"
#include "elx/syntax.hpp"
#include "support/generators.hpp"

namespace {

using namespace elx;
using Clock = std::chrono::steady_clock;

std::string fixture(const std::string& name) { return std::string(ELX_FIXTURE_DIR) + "/" + name; }

// Collects failed checks for one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

bool has(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void shared_filler(Check& c) {
  const auto v = cli_run({"validate", fixture("shared_filler.elx")});
  c.expect(v.code == cli::kNegative, "validate exit code");
  c.expect(has(v.out, "line 5  none  exists r.?X and exists s.?X SubClassOf exists t.?X"), "alpha not flagged");
  c.expect(has(v.out, "lhs not linear: ?X occurs twice"), "linearity reason missing");

  const auto kb = cli_run({"oracle", "check-model", fixture("successors.model"), fixture("successors.elx"), "--goal",
                           "A SubClassOf D"});
  c.expect(kb.code == cli::kNegative, "check-model on the ontology: goal should be refuted");
  c.expect(!has(kb.out, "violated: A SubClassOf exists") && !has(kb.out, "violated: exists t"),
           "model should satisfy the ontology");
  c.expect(has(kb.out, "goal violated: A SubClassOf D"), "goal A SubClassOf D not refuted");

  const auto alpha = cli_run({"oracle", "check-model", fixture("successors.model"), fixture("shared_filler_axiom.elx")});
  c.expect(alpha.code == cli::kNegative, "alpha should be violated");
  c.expect(has(alpha.out, "violated: exists r.?X and exists s.?X SubClassOf exists t.?X at η(?X)={b,c}"),
           "witness valuation for alpha");

  const auto schema = cli_run({"entails", fixture("split_filler.elx"), "--goal", "A SubClassOf D", "--schema-base",
                               fixture("fillers.base")});
  c.expect(schema.code == cli::kAffirmative && has(schema.out, "ENTAILED"), "schema entailment over {B, C}");

  const auto ground = parse_ontology(
      "A SubClassOf exists r.B and exists s.C\nexists t.B SubClassOf D\nexists t.C SubClassOf D\n"
      "exists r.B and exists s.C SubClassOf exists t.B\n");
  c.expect(check_schema(ground.ontology, parse_axiom("A SubClassOf D"), {parse_concept("B"), parse_concept("C")}),
           "check_schema with the ground instance");
}

void unrestricted_and_unsafe(Check& c) {
  const auto v3 = cli_run({"validate", fixture("unrestricted.elx")});
  c.expect(v3.code == cli::kNegative && has(v3.out, "not range restricted"), "unrestricted range restriction");
  const auto v4 = cli_run({"validate", fixture("unsafe.elx")});
  c.expect(v4.code == cli::kNegative && has(v4.out, "rhs not safe"), "unsafe safety");

  const auto m3 = cli_run({"oracle", "check-model", fixture("unrestricted.model"), fixture("unrestricted.elx")});
  c.expect(m3.code == cli::kNegative && has(m3.out, "at η(?X)={}"), "unrestricted valuation");
  const auto m4 = cli_run({"oracle", "check-model", fixture("unsafe.model"), fixture("unsafe.elx")});
  c.expect(m4.code == cli::kNegative && has(m4.out, "at η(?X)={b}"), "unsafe valuation");

  const auto r4 = cli_run({"oracle", "refute", fixture("unsafe.elx"), "--goal", "exists r.Top SubClassOf exists r.A",
                           "--max-domain", "3"});
  c.expect(r4.code == cli::kUnknown && has(r4.out, "NO COUNTERMODEL up to 3 elements"), "unsafe refute");
}

void expansion_levels(Check& c) {
  const auto r = cli_run({"expand", fixture("expansion.elx"), "--goal", "A SubClassOf B", "--max-level", "3"});
  c.expect(r.code == cli::kUnknown, "expand exit code");
  c.expect(has(r.out, "H0 = {A}\n"), "H0");
  c.expect(has(r.out, "H1 = {A, exists r.A}\n"), "H1");
  c.expect(has(r.out, "H2 = {A, exists r.A, exists r.exists r.A}\n"), "H2");
  c.expect(has(r.out, "fixpoint_reached = false"), "fixpoint flag");
}

void gelt_suite(Check& c) {
  struct Expect {
    const char* file;
    const char* goal;
    Status status;
  };
  const std::vector<Expect> cases = {
      {"grandfather.elx", "C SubClassOf exists grandfather.D", Status::Entailed},
      {"grandfather.elx", "D SubClassOf exists grandfather.C", Status::NotEntailed},
      {"reflexive.elx", "A SubClassOf exists r.A", Status::Entailed},
      {"reflexive.elx", "exists r.A SubClassOf A", Status::NotEntailed},
      {"self.elx", "Gorilla SubClassOf exists recognize.Gorilla", Status::Entailed},
      {"self.elx", "Human SubClassOf exists recognize.Human", Status::NotEntailed},
      {"local_rvm.elx", "John SubClassOf exists isFatherOf.Mary", Status::Entailed},
      {"local_rvm.elx", "Jane SubClassOf exists isFatherOf.Mary", Status::NotEntailed},
  };
  for (const auto& e : cases) {
    const auto kb = parse_ontology(read_file(fixture(e.file))).ontology;
    const auto goal = parse_axiom(e.goal);
    const auto v = decide(kb, goal);
    const std::string tag = std::string(e.file) + ": " + e.goal;
    c.expect(v.status == e.status && v.definitive, tag + " verdict " + to_string(v.status));
    const auto trace = expansion_base(kb, goal, 2);
    c.expect(trace.fixpoint_reached, tag + " fixpoint within 2 levels");
    c.expect(trace.final_base() == closed_form_base(kb, goal), tag + " closed form");
  }

  testing::Gen gen(1004);
  const testing::Vocabulary voc;
  int mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    Ontology kb;
    for (int k = gen.uniform(1, 4); k > 0; --k) kb.add(gen.gelt_axiom(voc));
    const auto goal = gen.ground_axiom(voc);
    const auto trace = expansion_base(kb, goal, 2);
    if (!trace.fixpoint_reached || trace.final_base() != closed_form_base(kb, goal)) ++mismatches;
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " random gelt runs missed the closed form");
}

void singleton_suite(Check& c) {
  testing::Gen gen(1005);
  const testing::Vocabulary voc;
  int discrepancies = 0;
  for (int i = 0; i < 500; ++i) {
    const auto a = gen.gelo_axiom(voc);
    const auto I = gen.interpretation(voc, gen.uniform(1, 3));
    if (satisfies_so(I, a, ValuationMode::All) != satisfies_so(I, a, ValuationMode::Singleton)) ++discrepancies;
  }
  c.expect(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
}

void canonical_suite(Check& c) {
  testing::Gen gen(1006);
  const testing::Vocabulary voc;
  int found = 0;
  int discrepancies = 0;
  for (int attempt = 0; found < 200 && attempt < 20000; ++attempt) {
    Ontology kb;
    for (int k = gen.uniform(1, 4); k > 0; --k) kb.add(gen.coin(0.6) ? gen.gelt_axiom(voc) : gen.ground_axiom(voc));
    Axiom goal{gen.ground_concept(voc, 2), gen.ground_concept(voc, 2)};
    const auto v = decide(kb, goal);
    if (v.status != Status::NotEntailed) continue;
    ++found;
    const auto cm = canonical_countermodel(v);
    bool ok = !satisfies_so(cm.model, goal, ValuationMode::All);
    for (const auto& a : kb) ok = ok && satisfies_so(cm.model, a, ValuationMode::Singleton);
    if (!ok) ++discrepancies;
  }
  c.expect(found == 200, "only " + std::to_string(found) + " NotEntailed cases generated");
  c.expect(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
}

Concept chain(const std::vector<std::string>& roles) {
  Concept out = Concept::var("X");
  for (auto it = roles.rbegin(); it != roles.rend(); ++it) out = Concept::exists(*it, out);
  return out;
}

void role_composition_suite(Check& c) {
  std::vector<std::vector<std::string>> chains;
  for (const char* a : {"r", "s"}) {
    chains.push_back({a});
    for (const char* b : {"r", "s"}) chains.push_back({a, b});
  }
  int discrepancies = 0;
  int checked = 0;
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    FiniteInterpretation I({"a", "b"});
    std::uint64_t s = bits;
    for (const char* role : {"r", "s"}) {
      auto& succ = I.role_extension_mut(role);
      for (std::size_t d = 0; d < 2; ++d) {
        for (std::size_t e = 0; e < 2; ++e, s >>= 1) {
          if (s & 1) succ[d].insert(e);
        }
      }
    }
    for (const auto& lhs : chains) {
      for (const auto& rhs : chains) {
        // Composite right sides are outside the sugar, so the axiom is built directly.
        const auto a = Axiom{chain(lhs), chain(rhs)};
        ++checked;
        if (satisfies_so(I, a, ValuationMode::All) != check_role_composition(I, lhs, rhs)) ++discrepancies;
      }
    }
  }
  c.expect(checked == 256 * 6 * 6, "unexpected case count");
  c.expect(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
}

void valuation_properties(Check& c) {
  testing::Gen gen(1008);
  const testing::Vocabulary voc;
  int empty_fail = 0, shrink_fail = 0, grow_fail = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto I = gen.interpretation(voc, gen.uniform(1, 4));
    auto eta = gen.valuation(I, voc);
    const auto concept_any = gen.any_concept(voc, 4);
    const auto vs = vars(concept_any);
    if (!vs.empty()) {
      auto emptied = eta;
      emptied[*vs.begin()] = ElementSet(I.size());
      if (!eval_concept(I, emptied, concept_any).empty()) ++empty_fail;
    } else if (eval_concept(I, eta, concept_any) != eval_concept(I, {}, concept_any)) {
      ++empty_fail;
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const auto I = gen.interpretation(voc, gen.uniform(1, 4), 0.5);
    const auto eta = gen.valuation(I, voc, 0.6);
    auto pool = voc.variables;
    const auto lin = gen.linear_concept(voc, 3, pool);
    const auto vs = vars(lin);
    const std::vector<std::string> names(vs.begin(), vs.end());
    for (auto d : eval_concept(I, eta, lin).elements()) {
      // Some singleton valuation below eta keeps d.
      bool found = false;
      std::vector<std::vector<std::size_t>> choices;
      for (const auto& v : names) choices.push_back(eta.at(v).elements());
      std::vector<std::size_t> idx(names.size(), 0);
      for (bool more = true; more && !found;) {
        Valuation single;
        for (std::size_t k = 0; k < names.size(); ++k) {
          single[names[k]] = ElementSet::singleton(I.size(), choices[k][idx[k]]);
        }
        found = eval_concept(I, single, lin).contains(d);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
        more = k < idx.size();
      }
      if (!found) ++shrink_fail;
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const auto I = gen.interpretation(voc, gen.uniform(1, 4));
    const auto eta = gen.valuation(I, voc);
    Valuation smaller;
    for (const auto& [v, set] : eta) {
      ElementSet sub(I.size());
      for (auto e : set.elements()) {
        if (gen.coin()) sub.insert(e);
      }
      smaller.emplace(v, sub);
    }
    const auto concept_any = gen.any_concept(voc, 4);
    if (!eval_concept(I, smaller, concept_any).is_subset_of(eval_concept(I, eta, concept_any))) ++grow_fail;
  }
  c.expect(empty_fail == 0, std::to_string(empty_fail) + " empty-valuation failures");
  c.expect(shrink_fail == 0, std::to_string(shrink_fail) + " shrink failures");
  c.expect(grow_fail == 0, std::to_string(grow_fail) + " grow failures");
}

Ontology chain_family(int n) {
  Ontology kb;
  for (int i = 0; i < n; ++i) {
    kb.add({Concept::atom("A" + std::to_string(i)), Concept::exists("r", Concept::atom("A" + std::to_string(i + 1)))});
  }
  kb.add(parse_axiom("exists r.exists r.?X SubClassOf exists r.?X"));
  return kb;
}

// Median seconds per decide call, repeating small instances to get above timer noise.
double time_decide(int n, Check& c) {
  const auto kb = chain_family(n);
  const Axiom goal{Concept::atom("A0"), Concept::exists("r", Concept::atom("A" + std::to_string(n)))};
  std::vector<double> samples;
  for (int round = 0; round < 5; ++round) {
    int reps = 0;
    const auto start = Clock::now();
    do {
      const auto v = decide(kb, goal);
      if (v.status != Status::Entailed || !v.definitive) {
        c.expect(false, "chain n=" + std::to_string(n) + " not entailed");
        return 0;
      }
      ++reps;
    } while (seconds_since(start) < 0.05);
    samples.push_back(seconds_since(start) / reps);
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

void scaling(Check& c, std::string& detail) {
  const std::vector<int> sizes = {10, 20, 40, 80};
  std::vector<double> xs, ys;
  std::ostringstream os;
  for (int n : sizes) {
    const double t = time_decide(n, c);
    xs.push_back(std::log(n));
    ys.push_back(std::log(std::max(t, 1e-9)));
    os << "n=" << n << ":" << t << "s ";
  }
  // Least-squares slope of log t against log n.
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = num / den;
  os << "slope=" << slope;
  detail = os.str();
  c.expect(slope <= 3.2, "log-log slope above 3.2");
  c.expect(std::exp(ys.back()) < 10.0, "n=80 took 10 s or more");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double time_limit;
    std::function<void(Check&, std::string&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "shared filler ontology", 1.0, [](Check& c, std::string&) { shared_filler(c); }},
      {2, "unrestricted and unsafe axioms", 5.0, [](Check& c, std::string&) { unrestricted_and_unsafe(c); }},
      {3, "expansion levels", 0, [](Check& c, std::string&) { expansion_levels(c); }},
      {4, "gelt decision suite", 0, [](Check& c, std::string&) { gelt_suite(c); }},
      {5, "singleton valuations suffice on gelo", 0, [](Check& c, std::string&) { singleton_suite(c); }},
      {6, "canonical countermodels", 0, [](Check& c, std::string&) { canonical_suite(c); }},
      {7, "role composition equivalence", 60.0, [](Check& c, std::string&) { role_composition_suite(c); }},
      {8, "valuation properties", 0, [](Check& c, std::string&) { valuation_properties(c); }},
      {9, "polynomial scaling on chain families", 0, scaling},
  };
  int failed = 0;
  std::cout << std::fixed << std::setprecision(3);
  for (const auto& cr : criteria) {
    Check check;
    std::string detail;
    const auto start = Clock::now();
    try {
      cr.body(check, detail);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (cr.time_limit > 0 && elapsed >= cr.time_limit) {
      check.expect(false, "took " + std::to_string(elapsed) + " s, limit " + std::to_string(cr.time_limit) + " s");
    }
    const bool ok = check.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << cr.id << "  " << cr.name << "  (" << elapsed << " s)";
    if (!detail.empty()) std::cout << "  " << detail;
    std::cout << "\n";
    for (const auto& f : check.failures) std::cout << "      " << f << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
