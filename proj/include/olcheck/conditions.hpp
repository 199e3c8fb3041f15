#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "olcheck/error.hpp"
#include "olcheck/lattice.hpp"
#include "olcheck/syntax.hpp"

namespace olcheck {

/// Universally quantified `premises => conclusion` over lattice terms; an
/// identity has no premises.
struct HornCondition {
  std::string name;
  std::vector<std::string> vars;
  std::vector<Equation> premises;
  Equation conclusion;

  bool is_identity() const noexcept { return premises.empty(); }
};

/// How conditions written with a bare equivalence are read: with ==q, with
/// ==c, or as the Horn implication `lhs = 1 => rhs = 1` of the identity.
enum class Reading { Q, C, Horn };

constexpr std::string_view to_string(Reading r) {
  switch (r) {
    case Reading::Q: return "q";
    case Reading::C: return "c";
    case Reading::Horn: return "horn";
  }
  return "?";
}

namespace detail {

inline HornCondition make_condition(std::string name, std::string_view vars, std::initializer_list<const char*> premises,
                                    const char* conclusion) {
  HornCondition c{std::move(name), split_ws(vars), {}, Equation{LatticeTerm::zero(), LatticeTerm::zero()}};
  for (const char* p : premises) c.premises.push_back(parse_equation(p, c.vars, false));
  c.conclusion = parse_equation(conclusion, c.vars, false);
  return c;
}

inline std::vector<HornCondition> build_catalog() {
  std::vector<HornCondition> cat;
  auto add = [&](std::string name, std::string_view vars, std::initializer_list<const char*> premises,
                 const char* conclusion) { cat.push_back(make_condition(std::move(name), vars, premises, conclusion)); };

  // ortholattice axioms
  add("OL1", "a", {}, "a'' = a");
  add("OL2", "a b", {}, "a v (a ^ b) = a");
  add("OL3", "a b", {}, "a v b = b v a");
  add("OL4", "a b", {}, "a ^ b = (a' v b')'");
  add("OL5", "a b", {}, "a v (b v b') = b v b'");
  add("OL6", "a b c", {}, "(a v b) v c = a v (b v c)");

  add("OM_horn", "a b", {"a ==q b = 1"}, "a = b");
  add("DIST_horn", "a b", {"a ==c b = 1"}, "a = b");
  add("OM_eq", "a b", {}, "a v (a' ^ (a v b)) = a v b");
  add("OM_unit", "a b", {}, "(a v (a' ^ (a v b))) ==q (a v b) = 1");
  add("DIST_eq", "a b c", {}, "a ^ (b v c) = (a ^ b) v (a ^ c)");

  add("WOM_horn1", "a b", {"a ->1 b = 1"}, "b' ->1 a' = 1");
  add("WOM_horn2", "a b c", {"a ==q b = 1"}, "(a v c) ==q (b v c) = 1");
  add("WOM_horn2_c", "a b c", {"a ==c b = 1"}, "(a v c) ==c (b v c) = 1");
  add("WOML1_id", "a b", {}, "(a ->1 b) ==q (b ->1 a) = a ==q b");
  add("WOML1_id_c", "a b", {}, "(a ->1 b) ==c (b ->1 a) = a ==c b");
  add("WOML2_id", "a b", {}, "(a ==q b)' ->1 a' = a ->1 b");
  add("WOML2_id_c", "a b", {}, "(a ==c b)' ->1 a' = a ->1 b");

  add("COMM", "a b", {}, "(a ^ b) v (a ^ b') v (a' ^ b) v (a' ^ b') = 1");
  add("WDIST", "a b c", {}, "(a v (b ^ c)) ==c ((a v b) ^ (a v c)) = 1");

  for (int i = 0; i <= 5; ++i) {
    const auto k = std::to_string(i);
    const auto premise = "a ->" + k + " b = 1";
    cat.push_back(make_condition("IMPL_LEQ_" + k, "a b", {premise.c_str()}, "a ^ b = a"));
  }
  for (int i = 1; i <= 5; ++i) {
    const auto k = std::to_string(i);
    const auto identity = "a ==q b = (a ->" + k + " b) ^ (b ->" + k + " a)";
    cat.push_back(make_condition("EQUIV_DECOMP_" + k, "a b", {}, identity.c_str()));
  }
  return cat;
}

}  // namespace detail

inline const std::vector<HornCondition>& condition_catalog() {
  static const std::vector<HornCondition> catalog = detail::build_catalog();
  return catalog;
}

inline std::vector<std::string> condition_names() {
  std::vector<std::string> out;
  for (const auto& c : condition_catalog()) out.push_back(c.name);
  return out;
}

inline bool has_builtin_condition(std::string_view name) {
  const auto& cat = condition_catalog();
  return std::any_of(cat.begin(), cat.end(), [&](const HornCondition& c) { return c.name == name; });
}

inline HornCondition builtin_condition(std::string_view name) {
  for (const auto& c : condition_catalog()) {
    if (c.name == name) return c;
  }
  throw Error(ErrorKind::UnknownCondition, "no builtin condition '" + std::string(name) + "'");
}

/// `t = s` read as `t = 1 => s = 1`. Conditions that already have premises
/// are returned unchanged.
inline HornCondition horn_reading(const HornCondition& c) {
  if (!c.is_identity()) return c;
  HornCondition out = c;
  out.name = c.name + "_horn";
  out.premises = {Equation{c.conclusion.lhs, LatticeTerm::one()}};
  out.conclusion = Equation{c.conclusion.rhs, LatticeTerm::one()};
  return out;
}

/// Resolves a catalog name under a reading. `c` selects the `<name>_c`
/// variant where one exists; `horn` applies horn_reading to the q variant.
inline HornCondition condition_for_reading(std::string_view name, Reading reading) {
  std::string base(name);
  if (base.size() > 2 && base.ends_with("_c") && has_builtin_condition(base)) base.resize(base.size() - 2);
  switch (reading) {
    case Reading::Q: return builtin_condition(base);
    case Reading::C: return has_builtin_condition(base + "_c") ? builtin_condition(base + "_c") : builtin_condition(base);
    case Reading::Horn: return horn_reading(builtin_condition(base));
  }
  return builtin_condition(base);
}

inline bool has_c_reading(std::string_view name) { return has_builtin_condition(std::string(name) + "_c"); }

// Condition file format:
//   condition <name>
//   vars a b c
//   premise <term> = <term>      (zero or more)
//   conclude <term> = <term>
inline HornCondition parse_condition(std::string_view text) {
  HornCondition c{"unnamed", {}, {}, Equation{LatticeTerm::zero(), LatticeTerm::zero()}};
  bool have_vars = false, have_conclusion = false;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto line = detail::strip_comment(raw);
    std::istringstream words(line);
    std::string directive;
    if (!(words >> directive)) continue;
    std::string rest;
    std::getline(words, rest);
    const auto where = "line " + std::to_string(lineno) + ": ";
    auto equation = [&] {
      if (!have_vars) throw Error(ErrorKind::SyntaxError, where + "'vars' must precede equations");
      try {
        return parse_equation(rest, c.vars, false);
      } catch (const Error& e) {
        throw Error(e.kind(), where + e.detail());
      }
    };
    if (directive == "condition") {
      auto toks = detail::split_ws(rest);
      if (toks.size() != 1) throw Error(ErrorKind::SyntaxError, where + "expected 'condition <name>'");
      c.name = toks[0];
    } else if (directive == "vars") {
      if (have_vars) throw Error(ErrorKind::SyntaxError, where + "duplicate 'vars'");
      c.vars = detail::split_ws(rest);
      have_vars = true;
    } else if (directive == "premise") {
      if (have_conclusion) throw Error(ErrorKind::SyntaxError, where + "premise after 'conclude'");
      c.premises.push_back(equation());
    } else if (directive == "conclude") {
      if (have_conclusion) throw Error(ErrorKind::SyntaxError, where + "duplicate 'conclude'");
      c.conclusion = equation();
      have_conclusion = true;
    } else {
      throw Error(ErrorKind::SyntaxError, where + "unknown directive '" + directive + "'");
    }
  }
  if (!have_conclusion) throw Error(ErrorKind::SyntaxError, "missing 'conclude' line");
  return c;
}

inline HornCondition load_condition_file(const std::string& path) { return parse_condition(detail::read_file(path)); }

inline std::string equation_text(const Equation& e, std::span<const std::string> names,
                                 Notation notation = Notation::Ascii) {
  return to_string(e.lhs, names, notation) + " = " + to_string(e.rhs, names, notation);
}

inline std::string to_text(const HornCondition& c) {
  std::string out = "condition " + c.name + "\nvars";
  for (const auto& v : c.vars) out += " " + v;
  out += "\n";
  for (const auto& p : c.premises) out += "premise " + equation_text(p, c.vars) + "\n";
  return out + "conclude " + equation_text(c.conclusion, c.vars) + "\n";
}

/// One-line human form, e.g. `a ==q b = 1  =>  a = b`.
inline std::string describe(const HornCondition& c, Notation notation = Notation::Ascii) {
  std::string out;
  for (std::size_t i = 0; i < c.premises.size(); ++i) {
    out += (i ? " & " : "") + equation_text(c.premises[i], c.vars, notation);
  }
  if (!out.empty()) out += notation == Notation::Unicode ? "  ⇒  " : "  =>  ";
  return out + equation_text(c.conclusion, c.vars, notation);
}

}  // namespace olcheck
