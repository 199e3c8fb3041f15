#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "olcheck/olcheck.hpp"
#include "support/wff_gen.hpp"

using namespace olcheck;

using gen::corpus;
using gen::kBinary;
using gen::random_node;
using gen::uses;

TEST(RoundTrip, GeneratedWffs) {
  const auto ws = corpus(4, 200, 20240611);
  EXPECT_TRUE(gen::covers_all_connectives(ws));
  for (const auto& w : ws) {
    const auto text = to_string(w);
    const auto back = parse_wff(text);
    EXPECT_EQ(back, w) << text;
    EXPECT_EQ(to_string(back), text);
    EXPECT_EQ(to_string(parse_wff(to_string(w, Notation::Ascii))), text);
  }
}

TEST(RoundTrip, GeneratedLatticeTerms) {
  const std::vector<std::string> names{"a", "b", "c"};
  for (const auto& w : corpus(3, 200, 77)) {
    const auto t = translate(w);
    const auto text = to_string(t, names);
    std::vector<std::string> n = names;
    EXPECT_EQ(parse_term(text, n, false), t) << text;
  }
}

TEST(Expansion, IdempotentPrimitiveAndVariablePreserving) {
  for (const auto& w : corpus(3, 200, 5)) {
    const auto e = expand(w);
    EXPECT_EQ(expand(e), e);
    EXPECT_EQ(e.variables(), w.variables());
    for (auto c : kBinary) {
      if (c != Connective::Or) {
        EXPECT_FALSE(uses(*e.node(), c));
      }
    }
  }
}

// eval(t) = eval(expand(t)) on every O6 valuation of every 2-variable term.
TEST(Expansion, EvalRespectsExpansionOnHexagon) {
  const auto L = builtin("O6");
  for (const auto& w : corpus(2, 200, 20240611)) {
    const auto t = translate(w);
    const auto e = expand(t);
    for (const auto& v : enumerate_valuations(L, 2)) ASSERT_EQ(eval(t, L, v), eval(e, L, v)) << to_string(w);
  }
}

TEST(Expansion, EvalRespectsExpansionOnEveryBuiltin) {
  for (const auto& name : builtin_names()) {
    const auto L = builtin(name);
    for (const auto& w : corpus(2, 40, 99)) {
      const auto t = translate(w);
      const auto e = expand(t);
      for (const auto& v : enumerate_valuations(L, 2)) ASSERT_EQ(eval(t, L, v), eval(e, L, v)) << name;
    }
  }
}

TEST(Matching, EveryInstanceMatchesItsSchema) {
  std::mt19937 rng(1234);
  for (auto system : {System::CL, System::QL}) {
    for (const auto& schema : axioms(system)) {
      for (int trial = 0; trial < 25; ++trial) {
        Substitution sigma;
        for (const char* mv : {"A", "B", "C"}) sigma.emplace(mv, Wff(random_node(rng, 2, 3)));
        const auto w = instantiate(schema, sigma);
        const auto got = match_schema(schema, w);
        ASSERT_TRUE(got) << schema.name << ": " << to_string(w);
        EXPECT_EQ(expand(instantiate(schema, *got)), expand(w));
      }
    }
  }
}

TEST(LatticeLaws, HoldOnEveryBuiltin) {
  for (const auto& name : builtin_names()) {
    const auto L = builtin(name);
    const auto n = static_cast<Element>(L.size());
    for (Element a = 0; a < n; ++a) {
      EXPECT_EQ(L.ortho(L.ortho(a)), a);
      EXPECT_EQ(L.meet(a, L.ortho(a)), L.bottom());
      EXPECT_EQ(L.join(a, L.ortho(a)), L.top());
      for (Element b = 0; b < n; ++b) {
        EXPECT_EQ(L.join(a, b), L.join(b, a));
        EXPECT_EQ(L.join(a, L.meet(a, b)), a);
        EXPECT_EQ(L.meet(a, L.join(a, b)), a);
        EXPECT_EQ(L.ortho(L.join(a, b)), L.meet(L.ortho(a), L.ortho(b)));
        EXPECT_EQ(L.leq(a, b), L.join(a, b) == b);
        if (L.leq(a, b)) {
          EXPECT_TRUE(L.leq(L.ortho(b), L.ortho(a)));
        }
        for (Element c = 0; c < n; ++c) {
          EXPECT_EQ(L.join(L.join(a, b), c), L.join(a, L.join(b, c)));
          EXPECT_EQ(L.meet(L.meet(a, b), c), L.meet(a, L.meet(b, c)));
        }
      }
    }
    EXPECT_TRUE(check_invariants(L).ok()) << name;
  }
}

// Identities and Horn sentences passing on a lattice pass on its O6
// subalgebra.
TEST(SubalgebraClosure, CatalogOnEmbeddedHexagons) {
  for (const char* lat : {"O7", "O8"}) {
    const auto L = builtin(lat);
    const auto o6 = find_o6_subalgebra(L);
    ASSERT_TRUE(o6);
    const auto sub = L.subalgebra(o6->elements, "sub");
    ASSERT_TRUE(find_isomorphism(sub, builtin("O6")));
    for (const auto& c : condition_catalog()) {
      for (auto reading : {Reading::Q, Reading::Horn}) {
        const auto cond = condition_for_reading(c.name, reading);
        if (check_horn(L, cond).passed) {
          EXPECT_TRUE(check_horn(sub, cond).passed) << lat << " " << cond.name;
        }
      }
    }
  }
}

TEST(SubalgebraClosure, BooleanBlocksInsideLargerBooleans) {
  const auto B16 = builtin("B16");
  // {0, a, a', 1} is a four-element Boolean subalgebra.
  const auto a = B16.at("a");
  const std::vector<Element> block{B16.bottom(), a, B16.ortho(a), B16.top()};
  const auto sub = B16.subalgebra(block, "block");
  EXPECT_TRUE(find_isomorphism(sub, builtin("B4")));
  for (const auto& c : condition_catalog()) {
    if (check_horn(B16, c).passed) {
      EXPECT_TRUE(check_horn(sub, c).passed) << c.name;
    }
  }
}

TEST(Witnesses, GenuineAndMinimal) {
  auto holds = [](const FiniteOrtholattice& L, const HornCondition& c, const Valuation& v) {
    for (const auto& p : c.premises) {
      if (eval(p.lhs, L, v) != eval(p.rhs, L, v)) return true;
    }
    return eval(c.conclusion.lhs, L, v) == eval(c.conclusion.rhs, L, v);
  };
  for (const auto& name : builtin_names()) {
    const auto L = builtin(name);
    for (const auto& c : condition_catalog()) {
      const auto r = check_horn(L, c);
      const ValuationSequence seq(L.size(), c.vars.size());
      const auto stop = r.passed ? seq.count() : r.scanned - 1;
      for (std::uint64_t k = 0; k < stop; ++k) ASSERT_TRUE(holds(L, c, seq.at(k))) << name << " " << c.name;
      if (!r.passed) {
        EXPECT_EQ(seq.at(r.scanned - 1), *r.witness);
        EXPECT_FALSE(holds(L, c, *r.witness)) << name << " " << c.name;
      }
    }
  }
}
