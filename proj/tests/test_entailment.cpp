#include <gtest/gtest.h>

#include "elx/entailment.hpp"
#include "elx/error.hpp"
#include "elx/fragments.hpp"
#include "elx/oracle.hpp"
#include "elx/syntax.hpp"
#include "support/generators.hpp"

namespace elx {
namespace {

Ontology kb_of(const char* text) { return parse_ontology(text).ontology; }
Axiom ax(const char* text) { return parse_axiom(text); }
Concept cn(const char* text) { return parse_concept(text); }

const char* kSuccessorKb =
    "A SubClassOf exists r.B and exists s.C\n"
    "exists t.B SubClassOf D\n"
    "exists t.C SubClassOf D\n";

TEST(GeneralizeGoal, FreshNamesForVariables) {
  const auto g = generalize_goal(ax("exists r.?X SubClassOf exists s.?X"), {});
  EXPECT_EQ(g.goal, ax("exists r.F0 SubClassOf exists s.F0"));
  EXPECT_EQ(g.fresh_names, (std::map<std::string, std::string>{{"X", "F0"}}));
}

TEST(GeneralizeGoal, GroundGoalUnchanged) {
  const auto g = generalize_goal(ax("A SubClassOf B"), kb_of("A SubClassOf B\n"));
  EXPECT_EQ(g.goal, ax("A SubClassOf B"));
  EXPECT_TRUE(g.fresh_names.empty());
}

TEST(GeneralizeGoal, DistinctNamesAvoidingTheSignature) {
  const auto g = generalize_goal(ax("?X SubClassOf ?Y and F0"), kb_of("F1 SubClassOf exists F2.A\n"));
  EXPECT_EQ(g.goal, ax("F3 SubClassOf F0 and F4"));
  EXPECT_EQ(g.fresh_names.at("X"), "F3");
  EXPECT_EQ(g.fresh_names.at("Y"), "F4");
}

TEST(Decide, ReflexiveInstance) {
  const auto v = decide(kb_of("?X SubClassOf exists r.?X\n"), ax("A SubClassOf exists r.A"));
  EXPECT_EQ(v.status, Status::Entailed);
  EXPECT_EQ(v.level, 0);
  EXPECT_TRUE(v.definitive);
  EXPECT_TRUE(v.witness.contains(ax("A SubClassOf exists r.A")));
}

TEST(Decide, Grandfather) {
  const auto v = decide(kb_of("exists father.exists father.?X SubClassOf exists grandfather.?X\n"
                              "C SubClassOf exists father.exists father.D\n"),
                        ax("C SubClassOf exists grandfather.D"));
  EXPECT_EQ(v.status, Status::Entailed);
  EXPECT_TRUE(v.definitive);
  EXPECT_TRUE(v.witness.contains(ax("exists father.exists father.D SubClassOf exists grandfather.D")));
}

TEST(Decide, SuccessorOntologyAlone) {
  const auto v = decide(kb_of(kSuccessorKb), ax("A SubClassOf D"));
  EXPECT_EQ(v.status, Status::NotEntailed);
  EXPECT_TRUE(v.definitive);
  const auto cm = canonical_countermodel(v);
  EXPECT_TRUE(satisfies_so_kb(cm.model, kb_of(kSuccessorKb)));
  EXPECT_FALSE(satisfies_so(cm.model, ax("A SubClassOf D"), ValuationMode::All));
}

TEST(Decide, RefusesNonGelo) {
  for (const char* text : {"exists r.?X and exists s.?X SubClassOf exists t.?X\n", "A SubClassOf exists r.?X\n",
                           "exists r.?X SubClassOf exists s.(?X and A)\n"}) {
    EXPECT_THROW(decide(kb_of(text), ax("A SubClassOf B")), FragmentError) << text;
  }
}

TEST(Decide, NonGeltCanRunOutOfLevels) {
  const auto kb = kb_of("exists r.?X SubClassOf exists s.exists s.?X\nA SubClassOf exists r.B\n");
  const auto v = decide(kb, ax("A SubClassOf D"), 4);
  EXPECT_EQ(v.status, Status::Unknown);
  EXPECT_FALSE(v.definitive);
  EXPECT_EQ(v.level, 4);
  EXPECT_EQ(v.levels.size(), 5u);
  EXPECT_EQ(decide(kb, ax("A SubClassOf exists s.exists s.B"), 4).status, Status::Entailed);
}

// Positive fillers with a variable under an existential grow with every level.
TEST(Decide, NonGeltNeverReachesAFixpoint) {
  for (const char* text : {"?X SubClassOf exists r.exists r.?X\n", "exists s.?X SubClassOf exists r.exists r.?X\n",
                           "exists s.?X SubClassOf exists r.(B and exists s.?X)\n"}) {
    const auto v = decide(kb_of(text), ax("A SubClassOf B"), 3);
    EXPECT_EQ(v.status, Status::Unknown) << text;
    EXPECT_FALSE(v.definitive);
  }
}

TEST(Decide, NongroundGoal) {
  const auto v = decide(kb_of("?X SubClassOf exists r.?X\n"), ax("exists s.?Y SubClassOf exists s.exists r.?Y"));
  EXPECT_EQ(v.status, Status::Entailed);
  EXPECT_EQ(v.fresh_names.at("Y"), "F0");
  const auto w = decide(kb_of("?X SubClassOf exists r.?X\n"), ax("exists r.?Y SubClassOf ?Y"));
  EXPECT_EQ(w.status, Status::NotEntailed);
}

TEST(Decide, GeltWithZeroBudgetIsStillDefinitive) {
  const auto v = decide(kb_of("A SubClassOf exists r.B\nexists r.?X SubClassOf exists s.?X\n"),
                        ax("A SubClassOf exists s.C"), 0);
  EXPECT_TRUE(v.definitive);
  EXPECT_EQ(v.status, Status::NotEntailed);
}

TEST(CheckSchema, Examples) {
  const auto kb = kb_of(
      "A SubClassOf exists r.B and exists s.C\nexists t.B SubClassOf D\nexists t.C SubClassOf D\n"
      "exists r.B and exists s.C SubClassOf exists t.B\n");
  EXPECT_TRUE(check_schema(kb, ax("A SubClassOf D"), {cn("B"), cn("C")}));
  EXPECT_TRUE(check_schema(kb_of("A SubClassOf B\n"), ax("A SubClassOf B"), {cn("Z")}));
  EXPECT_FALSE(check_schema(kb_of("?X SubClassOf exists r.?X\n"), ax("B SubClassOf exists r.B"), {cn("A")}));
  EXPECT_THROW(check_schema({}, ax("A SubClassOf B"), {}), Error);
}

TEST(CheckSchema, AcceptsNonGeloAxioms) {
  const auto kb = kb_of(
      "A SubClassOf exists r.B and exists s.C\nexists t.B SubClassOf D\nexists t.C SubClassOf D\n"
      "exists r.?X and exists s.?X SubClassOf exists t.?X\n");
  EXPECT_FALSE(check_schema(kb, ax("A SubClassOf D"), {cn("B"), cn("C")}));
  EXPECT_TRUE(check_schema(kb_of("exists r.?X and exists s.?Y SubClassOf exists t.?X\n" "A SubClassOf exists r.B and exists s.C\nexists t.B SubClassOf D\n"),
                           ax("A SubClassOf D"), {cn("B"), cn("C")}));
}

Ontology random_gelt_kb(testing::Gen& gen, const testing::Vocabulary& voc) {
  Ontology kb;
  for (int k = gen.uniform(1, 4); k > 0; --k) kb.add(gen.coin(0.6) ? gen.gelt_axiom(voc) : gen.ground_axiom(voc));
  return kb;
}

// A goal with a fair chance of being entailed: a random consequence candidate or a kb instance.
Axiom random_goal(testing::Gen& gen, const testing::Vocabulary& voc, const Ontology& kb) {
  if (gen.coin(0.4)) {
    const auto& a = gen.pick(kb.axioms());
    Substitution theta;
    for (const auto& v : vars(a)) theta.emplace(v, gen.ground_concept(voc, 1));
    return apply_substitution(theta, a);
  }
  return {gen.ground_concept(voc, 2), gen.ground_concept(voc, 2)};
}

TEST(EntailmentProperties, EntailedGoalsHaveNoCountermodels) {
  testing::Gen gen(81);
  testing::Vocabulary small;
  small.names = {"A", "B"};
  small.roles = {"r"};
  small.variables = {"X", "Y"};
  int entailed = 0;
  for (int i = 0; i < 500; ++i) {
    const auto kb = random_gelt_kb(gen, small);
    const auto goal = random_goal(gen, small, kb);
    const auto v = decide(kb, goal);
    ASSERT_TRUE(v.definitive);
    if (v.status != Status::Entailed) continue;
    ++entailed;
    EXPECT_FALSE(refute_entailment(kb, goal, 3)) << print_ontology(kb) << print_axiom(goal);
  }
  EXPECT_GT(entailed, 100);
}

TEST(EntailmentProperties, NotEntailedGoalsHaveCanonicalCountermodels) {
  testing::Gen gen(82);
  const testing::Vocabulary voc;
  int refuted = 0;
  for (int i = 0; i < 400; ++i) {
    Ontology kb;
    for (int k = gen.uniform(1, 4); k > 0; --k) kb.add(gen.coin(0.7) ? gen.gelo_axiom(voc) : gen.ground_axiom(voc));
    const auto goal = random_goal(gen, voc, kb);
    const auto v = decide(kb, goal, 3);
    if (v.status != Status::NotEntailed) continue;
    ++refuted;
    const auto cm = canonical_countermodel(v);
    for (const auto& a : kb) {
      EXPECT_TRUE(satisfies_so(cm.model, a, ValuationMode::Singleton)) << print_ontology(kb) << print_axiom(goal);
    }
    EXPECT_FALSE(satisfies_so(cm.model, v.goal, ValuationMode::All)) << print_ontology(kb) << print_axiom(goal);
  }
  EXPECT_GT(refuted, 100);
}

TEST(EntailmentProperties, EntailmentIsMonotoneInTheLevel) {
  testing::Gen gen(83);
  const testing::Vocabulary voc;
  for (int i = 0; i < 200; ++i) {
    Ontology kb;
    for (int k = gen.uniform(1, 3); k > 0; --k) kb.add(gen.gelo_axiom(voc));
    const auto goal = random_goal(gen, voc, kb);
    const auto v = decide(kb, goal, 3);
    if (v.status != Status::Entailed) continue;
    ConceptSet base = v.base();
    for (int extra = 0; extra < 2; ++extra) {
      base = expand_level(base, kb);
      EXPECT_TRUE(entails_ground(ground_instances(kb, base), v.goal));
    }
  }
}

TEST(EntailmentProperties, GeltIsAlwaysDefinitive) {
  testing::Gen gen(84);
  const testing::Vocabulary voc;
  for (int i = 0; i < 300; ++i) {
    const auto kb = random_gelt_kb(gen, voc);
    const auto v = decide(kb, random_goal(gen, voc, kb), 1);
    EXPECT_TRUE(v.definitive);
    EXPECT_LE(v.level, 1);
  }
}

// A goal decided through fresh names agrees with its ground instances.
TEST(EntailmentProperties, NongroundGoalPathsAgree) {
  testing::Gen gen(85);
  const testing::Vocabulary voc;
  int entailed = 0;
  int refuted = 0;
  for (int i = 0; i < 400; ++i) {
    const auto kb = random_gelt_kb(gen, voc);
    const auto goal = gen.gelo_axiom(voc, 1);
    if (is_ground(goal)) continue;
    const auto v = decide(kb, goal);
    ASSERT_TRUE(v.definitive);
    if (v.status == Status::Entailed) {
      ++entailed;
      for (int k = 0; k < 3; ++k) {
        Substitution theta;
        for (const auto& x : vars(goal)) theta.emplace(x, gen.ground_concept(voc, 1));
        const auto inst = apply_substitution(theta, goal);
        EXPECT_EQ(decide(kb, inst).status, Status::Entailed) << print_ontology(kb) << print_axiom(inst);
      }
    } else {
      ++refuted;
      const auto cm = canonical_countermodel(v);
      EXPECT_FALSE(satisfies_so(cm.model, goal, ValuationMode::All)) << print_ontology(kb) << print_axiom(goal);
    }
  }
  EXPECT_GT(entailed, 10);
  EXPECT_GT(refuted, 10);
}

}  // namespace
}  // namespace elx
