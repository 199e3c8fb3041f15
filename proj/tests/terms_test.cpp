#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "olcheck/olcheck.hpp"

using namespace olcheck;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Io;
}

LatticeTerm term(std::string_view text) { return parse_term(text).term; }

LatticeTerm term_over(std::string_view text, std::vector<std::string> names) {
  return parse_term(text, names, false);
}

}  // namespace

TEST(Parser, ConjunctionDefinitionExpandsToNegatedDisjunction) {
  EXPECT_EQ(parse_wff("~(~p0 v ~p1)"), expand(parse_wff("p0 ^ p1")));
}

TEST(Parser, DisjunctionBindsTighterThanEquivalence) {
  const auto w = parse_wff("p0 ==q p1 v p2");
  ASSERT_EQ(w.op(), Connective::EquivQ);
  EXPECT_EQ(w.lhs(), parse_wff("p0"));
  EXPECT_EQ(w.rhs(), parse_wff("p1 v p2"));
}

TEST(Parser, PrecedenceLadder) {
  const auto w = parse_wff("~p0 ^ p1 v p2 ==q p3 ->1 p4");
  ASSERT_EQ(w.op(), Connective::Impl1);
  ASSERT_EQ(w.lhs().op(), Connective::EquivQ);
  ASSERT_EQ(w.lhs().lhs().op(), Connective::Or);
  ASSERT_EQ(w.lhs().lhs().lhs().op(), Connective::And);
  EXPECT_EQ(w.lhs().lhs().lhs().lhs().op(), Connective::Not);
}

TEST(Parser, OrAndAreLeftAssociative) {
  const auto t = term("a v b v c");
  ASSERT_EQ(t.op(), Connective::Or);
  EXPECT_EQ(t.lhs().op(), Connective::Or);
  const auto m = term("a ^ b ^ c");
  EXPECT_EQ(m.lhs().op(), Connective::And);
}

TEST(Parser, PostfixPrimeStacks) {
  const auto t = term("a''");
  ASSERT_EQ(t.op(), Connective::Not);
  EXPECT_EQ(t.lhs().op(), Connective::Not);
  EXPECT_EQ(to_string(t, std::vector<std::string>{"a"}), "a''");
}

TEST(Parser, AllImplicationsAndEquivalences) {
  const std::vector<std::pair<std::string, Connective>> cases{
      {"p0 ->c p1", Connective::Impl0}, {"p0 ->0 p1", Connective::Impl0}, {"p0 ->1 p1", Connective::Impl1},
      {"p0 ->2 p1", Connective::Impl2}, {"p0 ->3 p1", Connective::Impl3}, {"p0 ->4 p1", Connective::Impl4},
      {"p0 ->5 p1", Connective::Impl5}, {"p0 ==q p1", Connective::EquivQ}, {"p0 ==c p1", Connective::EquivC}};
  for (const auto& [text, op] : cases) EXPECT_EQ(parse_wff(text).op(), op) << text;
}

TEST(Parser, ImplicationChainIsAmbiguous) {
  EXPECT_EQ(kind_of([] { parse_term("a ->1 b ->1 c"); }), ErrorKind::AmbiguousChain);
  EXPECT_EQ(kind_of([] { parse_wff("p0 ==q p1 ==q p2"); }), ErrorKind::AmbiguousChain);
  EXPECT_NO_THROW(parse_term("(a ->1 b) ->1 c"));
  EXPECT_NO_THROW(parse_term("a ->1 (b ->1 c)"));
}

TEST(Parser, SyntaxErrorsCarryColumn) {
  try {
    parse_wff("p0 v ");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(e.detail().rfind("column 6", 0), 0u) << e.detail();
  }
  try {
    parse_wff("p0 v (p1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(e.detail().find("')'"), std::string::npos) << e.detail();
  }
  EXPECT_EQ(kind_of([] { parse_wff("p0 v 1"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse_wff("q0"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse_wff("p0 p1"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse_term("a ? b"); }), ErrorKind::SyntaxError);
}

TEST(Parser, UndeclaredVariableRejectedWhenClosed) {
  std::vector<std::string> names{"a", "b"};
  EXPECT_EQ(kind_of([&] { parse_term("a v c", names, false); }), ErrorKind::UnboundVariable);
  const auto t = parse_term("b v a", names, false);
  EXPECT_EQ(t.lhs().var(), 1u);
  EXPECT_EQ(t.rhs().var(), 0u);
}

TEST(Parser, ConstantsOnlyInTerms) {
  EXPECT_EQ(term("a v 0").rhs().op(), Connective::Zero);
  EXPECT_EQ(term("1'").lhs().op(), Connective::One);
  EXPECT_EQ(kind_of([] { parse_wff("0"); }), ErrorKind::SyntaxError);
}

TEST(Printer, CanonicalFormsRoundTrip) {
  const std::vector<std::string> wffs{
      "p0",
      "~p0",
      "~~p0",
      "~(p0 v p1)",
      "p0 v p1 v p2",
      "p0 v (p1 v p2)",
      "p0 ^ (p1 v p2)",
      "(p0 ->1 p1) ->1 p2",
      "p0 ->3 (p0 ->3 p1)",
      "(p0 ->c p1) ->3 (p0 ->3 (p0 ->3 p1))",
      "p0 ==q p1 ->c (p1 ==q p2 ->c p0 ==q p2)",
      "~(p0 ==c p1) ^ p2",
  };
  for (const auto& s : wffs) {
    const auto w = parse_wff(s);
    EXPECT_EQ(to_string(w), s);
    EXPECT_EQ(parse_wff(to_string(w)), w);
  }
}

TEST(Printer, LatticeTermsUsePostfixPrime) {
  const std::vector<std::string> names{"a", "b"};
  EXPECT_EQ(to_string(term_over("(a ^ b)'", names), names), "(a ^ b)'");
  EXPECT_EQ(to_string(term_over("a v (a' ^ (a v b))", names), names), "a v a' ^ (a v b)");
  EXPECT_EQ(to_string(term_over("a v 0", names), names), "a v 0");
}

TEST(Printer, Unicode) {
  const std::vector<std::string> names{"a", "b"};
  EXPECT_EQ(to_string(term_over("a' ->1 (a ^ b)", names), names, Notation::Unicode), "a′ →₁ a ∩ b");
  EXPECT_EQ(to_string(parse_wff("~p0 ->c p1 ^ p0"), Notation::Unicode), "¬p0 →c p1 ∧ p0");
  EXPECT_EQ(to_string(parse_wff("p0 ==q p1"), Notation::Unicode), "p0 ≡q p1");
}

TEST(Printer, UnnamedVariablesGetIndexedNames) {
  EXPECT_EQ(to_string(translate(parse_wff("p0 v p3"))), "a0 v a3");
}

TEST(Expand, QuantumEquivalence) {
  const std::vector<std::string> names{"a", "b"};
  const auto e = expand(term_over("a ==q b", names));
  EXPECT_EQ(e, term_over("(a' v b')' v (a'' v b'')'", names));
  EXPECT_EQ(to_string(e, names), "(a' v b')' v (a'' v b'')'");
}

TEST(Expand, DishkantImplication) {
  const std::vector<std::string> names{"a", "b"};
  EXPECT_EQ(expand(term_over("a ->2 b", names)), expand(term_over("b v (b' ^ a')", names)));
  EXPECT_EQ(to_string(expand(term_over("a ->2 b", names)), names), "b v (b'' v a'')'");
}

TEST(Expand, KalmbachImplication) {
  const std::vector<std::string> names{"a", "b"};
  EXPECT_EQ(expand(term_over("a ->3 b", names)),
            expand(term_over("(a' ^ b') v (a' ^ b) v (a ^ (a' v b))", names)));
}

TEST(Expand, DefinitionalForms) {
  const std::vector<std::string> names{"a", "b"};
  const std::vector<std::pair<std::string, std::string>> defs{
      {"a ->0 b", "a' v b"},
      {"a ->1 b", "a' v (a ^ b)"},
      {"a ->4 b", "(b ^ a) v (b ^ a') v (b' ^ (b v a'))"},
      {"a ->5 b", "(a ^ b) v (a' ^ b) v (a' ^ b')"},
      {"a ==c b", "(a' v b) ^ (b' v a)"},
  };
  for (const auto& [derived, primitive] : defs) {
    EXPECT_EQ(expand(term_over(derived, names)), expand(term_over(primitive, names))) << derived;
  }
}

TEST(Expand, PrimitiveTermsUnchanged) {
  const auto w = parse_wff("~~p0");
  EXPECT_EQ(expand(w), w);
  EXPECT_EQ(expand(w).node(), w.node());
}

TEST(Expand, IdempotentAndPreservesVariables) {
  for (const char* s : {"p0 ->3 p1", "p0 ==q p1 ->c p2", "(p0 ->5 p1) ^ ~(p2 ==c p0)", "p0 ->4 p0"}) {
    const auto w = parse_wff(s);
    const auto e = expand(w);
    EXPECT_EQ(expand(e), e) << s;
    EXPECT_EQ(e.variables(), w.variables()) << s;
  }
}

TEST(Translate, DirectImage) {
  EXPECT_EQ(to_string(translate(parse_wff("~p0 v p1"))), "a0' v a1");
  const auto a8 = translate(parse_wff("~p0 ^ p0 ==q (~p0 ^ p0) ^ p1"));
  EXPECT_EQ(to_string(a8), "a0' ^ a0 ==q a0' ^ a0 ^ a1");
  ASSERT_EQ(a8.op(), Connective::EquivQ);
  EXPECT_EQ(a8.lhs().op(), Connective::And);
  EXPECT_EQ(a8.rhs().lhs().op(), Connective::And);
  const auto k = translate(parse_wff("p0 ->3 p1"));
  EXPECT_EQ(k.op(), Connective::Impl3);
  EXPECT_EQ(to_string(k, {}, Notation::Unicode), "a0 →₃ a1");
}

TEST(Conditions, CatalogShapes) {
  const auto om = builtin_condition("OM_horn");
  EXPECT_EQ(om.vars, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(om.premises.size(), 1u);
  EXPECT_EQ(equation_text(om.premises[0], om.vars), "a ==q b = 1");
  EXPECT_EQ(equation_text(om.conclusion, om.vars), "a = b");

  const auto comm = builtin_condition("COMM");
  EXPECT_TRUE(comm.is_identity());
  EXPECT_EQ(comm.conclusion.rhs.op(), Connective::One);

  const auto leq0 = builtin_condition("IMPL_LEQ_0");
  ASSERT_EQ(leq0.premises.size(), 1u);
  EXPECT_EQ(expand(leq0.premises[0].lhs), expand(term_over("a' v b", leq0.vars)));
  EXPECT_EQ(equation_text(leq0.conclusion, leq0.vars), "a ^ b = a");
}

TEST(Conditions, UnknownName) {
  EXPECT_EQ(kind_of([] { builtin_condition("NOPE"); }), ErrorKind::UnknownCondition);
}

TEST(Conditions, ReadingsResolve) {
  EXPECT_EQ(condition_for_reading("WOML1_id", Reading::Q).name, "WOML1_id");
  EXPECT_EQ(condition_for_reading("WOML1_id", Reading::C).name, "WOML1_id_c");
  const auto h = condition_for_reading("WOML2_id", Reading::Horn);
  EXPECT_EQ(h.premises.size(), 1u);
  EXPECT_TRUE(has_c_reading("WOM_horn2"));
  EXPECT_FALSE(has_c_reading("COMM"));
}

TEST(Conditions, FileFormatRoundTrip) {
  const auto c = parse_condition(
      "# orthomodularity\n"
      "condition om\n"
      "vars a b\n"
      "premise a ==q b = 1\n"
      "conclude a = b\n");
  EXPECT_EQ(c.name, "om");
  EXPECT_EQ(c.premises.size(), 1u);
  const auto again = parse_condition(to_text(c));
  EXPECT_EQ(again.name, c.name);
  EXPECT_EQ(again.vars, c.vars);
  EXPECT_EQ(again.premises[0].lhs, c.premises[0].lhs);
  EXPECT_EQ(again.conclusion.rhs, c.conclusion.rhs);
}

TEST(Conditions, FileUndeclaredVariable) {
  EXPECT_EQ(kind_of([] { parse_condition("condition x\nvars a\nconclude a = b\n"); }), ErrorKind::UnboundVariable);
}

TEST(Conditions, SampleFilesLoad) {
  for (const char* f : {"orthomodular.cond", "modular.cond", "sasaki_symmetry.cond"}) {
    EXPECT_NO_THROW(load_condition_file(std::string(OLCHECK_SAMPLES) + "/conditions/" + f)) << f;
  }
}
