#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "olcheck/olcheck.hpp"

using namespace olcheck;

namespace {

std::string sample(const char* name) { return std::string(OLCHECK_SAMPLES) + "/proofs/" + name; }

ErrorKind verify_kind(const Derivation& d) {
  try {
    verify_derivation(d);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "derivation accepted:\n" << to_text(d);
  return ErrorKind::Io;
}

Derivation mp_example(System s) {
  Derivation d;
  d.system = s;
  d.hypotheses = {parse_wff("p0"), parse_wff("p0 ->3 p1")};
  d.lines = {{parse_wff("p0"), Justification::hypothesis(0)},
             {parse_wff("p0 ->3 p1"), Justification::hypothesis(1)},
             {parse_wff("p1"), Justification::mp(1, 2)}};
  return d;
}

}  // namespace

TEST(Catalog, Sizes) {
  EXPECT_EQ(axioms(System::CL).size(), 4u);
  EXPECT_EQ(axioms(System::QL).size(), 12u);
  EXPECT_EQ(rule_implication(System::CL), Connective::Impl0);
  EXPECT_EQ(rule_implication(System::QL), Connective::Impl3);
}

TEST(Catalog, NamesFollowPrintedLabels) {
  EXPECT_TRUE(find_axiom(System::CL, "A1"));
  EXPECT_FALSE(find_axiom(System::QL, "A1"));
  EXPECT_FALSE(find_axiom(System::QL, "A11"));
  EXPECT_FALSE(find_axiom(System::QL, "A15"));
  EXPECT_FALSE(find_axiom(System::CL, "A5"));
  ASSERT_TRUE(find_axiom(System::QL, "QL.A14"));
  EXPECT_EQ(find_axiom(System::QL, "A14")->name, "QL.A14");
  EXPECT_FALSE(find_axiom(System::QL, "CL.A1"));
}

TEST(Catalog, PatternsPrintAsWritten) {
  EXPECT_EQ(to_string(find_axiom(System::QL, "A14")->pattern), "(p0 ->c p1) ->3 (p0 ->3 (p0 ->3 p1))");
  EXPECT_EQ(to_string(find_axiom(System::QL, "A2")->pattern), "p0 ==q p1 ->c (p1 ==q p2 ->c p0 ==q p2)");
  EXPECT_EQ(to_string(find_axiom(System::CL, "A1")->pattern), "p0 v p0 ->c p0");
}

TEST(Match, CommutedDisjunction) {
  const auto s = match_schema(*find_axiom(System::CL, "A3"), parse_wff("p1 v p0 ->c p0 v p1"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->at("A"), parse_wff("p0"));
  EXPECT_EQ(s->at("B"), parse_wff("p1"));
  EXPECT_EQ(s->size(), 2u);
}

TEST(Match, RepeatedMetavariable) {
  const auto& a1 = *find_axiom(System::CL, "A1");
  const auto s = match_schema(a1, parse_wff("p0 v p0 ->c p0"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->at("A"), parse_wff("p0"));
  EXPECT_FALSE(match_schema(a1, parse_wff("p0 v p1 ->c p0")));
}

TEST(Match, ComplexInstances) {
  const auto& a14 = *find_axiom(System::QL, "A14");
  const auto w = parse_wff("(~p2 ->c p0 ^ p1) ->3 (~p2 ->3 (~p2 ->3 p0 ^ p1))");
  const auto s = match_schema(a14, w);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->at("A"), parse_wff("~p2"));
  EXPECT_EQ(s->at("B"), parse_wff("p0 ^ p1"));
  EXPECT_EQ(instantiate(a14, *s), w);
}

TEST(Match, DefinitionalSpellingsAreTransparent) {
  // ->c is a definition, so ~A v B stands in for A ->c B.
  const auto s = match_schema(*find_axiom(System::CL, "A3"), parse_wff("~(p1 v p0) v (p0 v p1)"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->at("A"), parse_wff("p0"));
  EXPECT_TRUE(match_schema(*find_axiom(System::QL, "A5"), parse_wff("~(~p0 v ~p1) ==q p1 ^ p0")));
  EXPECT_FALSE(match_schema(*find_axiom(System::QL, "A5"), parse_wff("p0 ^ p1 ==c p1 ^ p0")));
}

TEST(Derivation, Hypothesis) {
  Derivation d;
  d.hypotheses = {parse_wff("p0")};
  d.lines = {{parse_wff("p0"), Justification::hypothesis(0)}};
  const auto v = verify_derivation(d);
  EXPECT_EQ(v.conclusion, parse_wff("p0"));
  EXPECT_EQ(v.hypotheses.size(), 1u);
}

TEST(Derivation, AxiomInstance) {
  Derivation d;
  d.lines = {{parse_wff("p0 ==q ~~p0"), Justification::axiom_named("QL.A9")}};
  EXPECT_NO_THROW(verify_derivation(d));
}

TEST(Derivation, ModusPonensNeedsTheSystemsImplication) {
  EXPECT_NO_THROW(verify_derivation(mp_example(System::QL)));
  try {
    verify_derivation(mp_example(System::CL));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadMP);
    EXPECT_EQ(e.detail().rfind("line 3: ", 0), 0u) << e.detail();
  }
}

TEST(Derivation, Corruptions) {
  Derivation wrong_axiom;
  wrong_axiom.lines = {{parse_wff("p0 ==q ~~p0"), Justification::axiom_named("QL.A8")}};
  EXPECT_EQ(verify_kind(wrong_axiom), ErrorKind::NotAnAxiomInstance);

  Derivation absent = wrong_axiom;
  absent.lines[0].why = Justification::axiom_named("QL.A11");
  EXPECT_EQ(verify_kind(absent), ErrorKind::NotAnAxiomInstance);

  auto swapped = mp_example(System::QL);
  swapped.lines[2].why = Justification::mp(2, 1);
  EXPECT_EQ(verify_kind(swapped), ErrorKind::BadMP);

  auto forward = mp_example(System::QL);
  forward.lines[2].why = Justification::mp(1, 3);
  EXPECT_EQ(verify_kind(forward), ErrorKind::BadMP);

  auto wrong_consequent = mp_example(System::QL);
  wrong_consequent.lines[2].wff = parse_wff("p2");
  EXPECT_EQ(verify_kind(wrong_consequent), ErrorKind::BadMP);

  auto bad_hyp = mp_example(System::QL);
  bad_hyp.lines[0].why = Justification::hypothesis(5);
  EXPECT_EQ(verify_kind(bad_hyp), ErrorKind::BadHypothesisIndex);

  auto mismatched_hyp = mp_example(System::QL);
  mismatched_hyp.lines[0].why = Justification::hypothesis(1);
  EXPECT_EQ(verify_kind(mismatched_hyp), ErrorKind::BadHypothesisIndex);
}

TEST(Derivation, SampleFiles) {
  for (const char* f : {"hypothesis.proof", "a9.proof", "mp.proof", "a14_chain.proof", "a3.instance"}) {
    SCOPED_TRACE(f);
    const auto d = load_derivation_file(sample(f));
    EXPECT_NO_THROW(verify_derivation(d));
    const auto again = parse_derivation(to_text(d));
    EXPECT_EQ(to_text(again), to_text(d));
  }
  const auto chain = verify_derivation(load_derivation_file(sample("a14_chain.proof")));
  EXPECT_EQ(chain.conclusion, parse_wff("p1"));
}

TEST(Derivation, FileErrors) {
  auto kind = [](const char* text) {
    try {
      parse_derivation(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  EXPECT_EQ(kind("line 1 hyp 0 p0\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("system XL\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("system QL\nhyp 1 p0\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("system QL\nline 2 hyp 0 p0\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("system QL\nline 1 guess p0\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("system QL\nline 1 axiom A9 p0 ==q\n"), ErrorKind::SyntaxError);
  try {
    load_derivation_file(sample("missing.proof"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

TEST(Soundness, QuantumLogicOnWeakOrthomodularBuiltins) {
  for (const char* lat : {"O6", "O7", "O8", "MO2", "B8"}) {
    const auto r = soundness_suite(System::QL, builtin(lat));
    EXPECT_EQ(r.axioms.size(), 12u);
    EXPECT_TRUE(r.passed()) << lat;
  }
}

TEST(Soundness, ClassicalLogicOnWeaklyDistributiveBuiltins) {
  for (const char* lat : {"O6", "B2", "B4", "B8", "B16"}) {
    const auto r = soundness_suite(System::CL, builtin(lat));
    EXPECT_EQ(r.axioms.size(), 4u);
    EXPECT_TRUE(r.passed()) << lat;
  }
}

TEST(Soundness, ClassicalLogicFailsOnMO2) {
  // MO2 is not weakly distributive: ->c modus ponens breaks there.
  const auto r = soundness_suite(System::CL, builtin("MO2"));
  EXPECT_FALSE(r.passed());
}

// Accepted derivations are semantic consequences wherever the system's
// soundness suite passes.
TEST(Soundness, AcceptedDerivationsAreConsequences) {
  std::vector<Derivation> ds;
  for (const char* f : {"hypothesis.proof", "a9.proof", "mp.proof", "a14_chain.proof", "a3.instance"}) {
    ds.push_back(load_derivation_file(sample(f)));
  }
  for (const auto& name : builtin_names()) {
    const auto L = builtin(name);
    for (const auto& d : ds) {
      if (!soundness_suite(d.system, L).passed()) continue;
      const auto v = verify_derivation(d);
      EXPECT_TRUE(check_consequence(L, v.hypotheses, v.conclusion).passed) << name << "\n" << to_text(d);
    }
  }
}
