#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "olcheck/checker.hpp"
#include "olcheck/error.hpp"
#include "olcheck/lattice.hpp"
#include "olcheck/syntax.hpp"
#include "olcheck/term.hpp"

namespace olcheck {

enum class System { CL, QL };

constexpr std::string_view to_string(System s) { return s == System::CL ? "CL" : "QL"; }

inline System parse_system(std::string_view text) {
  if (text == "CL") return System::CL;
  if (text == "QL") return System::QL;
  throw Error(ErrorKind::SyntaxError, "unknown system '" + std::string(text) + "' (expected CL or QL)");
}

/// Implication used by modus ponens: ->c in CL, ->3 in QL.
constexpr Connective rule_implication(System s) { return s == System::CL ? Connective::Impl0 : Connective::Impl3; }

/// Axiom schema over metavariables A, B, C, stored as p0, p1, p2.
struct AxiomSchema {
  std::string name;  // e.g. QL.A9
  std::string text;  // as written, over A, B, C
  Wff pattern;
};

namespace detail {

inline Wff parse_schema(std::string_view text) {
  std::string src;
  for (char c : text) {
    if (c == 'A' || c == 'B' || c == 'C') {
      src += 'p';
      src += static_cast<char>('0' + (c - 'A'));
    } else {
      src += c;
    }
  }
  return parse_wff(src);
}

inline std::vector<AxiomSchema> make_schemata(System s, std::initializer_list<std::pair<const char*, const char*>> rows) {
  std::vector<AxiomSchema> out;
  for (const auto& [label, text] : rows) {
    out.push_back({std::string(to_string(s)) + "." + label, text, parse_schema(text)});
  }
  return out;
}

}  // namespace detail

inline const std::vector<AxiomSchema>& axioms(System s) {
  static const std::vector<AxiomSchema> cl = detail::make_schemata(System::CL, {
      {"A1", "A v A ->c A"},
      {"A2", "A ->c B v A"},
      {"A3", "B v A ->c A v B"},
      {"A4", "(A ->c B) ->c (C v A ->c C v B)"},
  });
  static const std::vector<AxiomSchema> ql = detail::make_schemata(System::QL, {
      {"A2", "A ==q B ->c (B ==q C ->c A ==q C)"},
      {"A3", "A ==q B ->c ~A ==q ~B"},
      {"A4", "A ==q B ->c A ^ C ==q B ^ C"},
      {"A5", "A ^ B ==q B ^ A"},
      {"A6", "A ^ (B ^ C) ==q (A ^ B) ^ C"},
      {"A7", "A ^ (A v B) ==q A"},
      {"A8", "~A ^ A ==q (~A ^ A) ^ B"},
      {"A9", "A ==q ~~A"},
      {"A10", "~(A v B) ==q ~A ^ ~B"},
      {"A12", "(A ==q B) ==q (B ==q A)"},
      {"A13", "A ==q B ->c (A ->c B)"},
      {"A14", "(A ->c B) ->3 (A ->3 (A ->3 B))"},
  });
  return s == System::CL ? cl : ql;
}

/// Looks up `name` (either `A9` or `QL.A9`) among the schemata of `s`.
inline std::optional<AxiomSchema> find_axiom(System s, std::string_view name) {
  std::string full(name);
  if (full.find('.') == std::string::npos) full = std::string(to_string(s)) + "." + full;
  for (const auto& a : axioms(s)) {
    if (a.name == full) return a;
  }
  return std::nullopt;
}

/// Metavariable name -> instantiating wff.
using Substitution = std::map<std::string, Wff>;

namespace detail {

inline bool expand_equal(const NodePtr& a, const NodePtr& b) {
  return structurally_equal(*expand_node(Sort::Wff, a), *expand_node(Sort::Wff, b));
}

// Matches pattern p against w, unfolding derived connectives only where the
// two trees disagree. Bindings are compared modulo expansion.
inline bool match(const NodePtr& p, const NodePtr& w, std::vector<NodePtr>& bound) {
  if (p->op == Connective::Var) {
    auto& slot = bound.at(p->var);
    if (!slot) {
      slot = w;
      return true;
    }
    return expand_equal(slot, w);
  }
  if (p->op == w->op) {
    auto saved = bound;
    bool ok = match(p->lhs, w->lhs, bound);
    if (ok && arity(p->op) == 2) ok = match(p->rhs, w->rhs, bound);
    if (ok) return true;
    bound = std::move(saved);
    if (is_primitive(p->op)) return false;
    return match(unfold(Sort::Wff, p), unfold(Sort::Wff, w), bound);
  }
  if (!is_primitive(p->op)) return match(unfold(Sort::Wff, p), w, bound);
  if (!is_primitive(w->op)) return match(p, unfold(Sort::Wff, w), bound);
  return false;
}

}  // namespace detail

/// Substitution sigma with expand(sigma(pattern)) == expand(w), or nothing.
inline std::optional<Substitution> match_schema(const AxiomSchema& schema, const Wff& w) {
  std::vector<NodePtr> bound(3);
  if (!detail::match(schema.pattern.node(), w.node(), bound)) return std::nullopt;
  std::vector<NodePtr> values = bound;
  for (auto& v : values) {
    if (!v) v = make_var(0);  // unused metavariable
  }
  if (!detail::expand_equal(substitute(schema.pattern.node(), values), w.node())) return std::nullopt;
  Substitution sigma;
  for (std::size_t i = 0; i < bound.size(); ++i) {
    if (bound[i]) sigma.emplace(std::string(1, static_cast<char>('A' + i)), Wff(bound[i]));
  }
  return sigma;
}

/// sigma(pattern), with unbound metavariables left as p0, p1, p2.
inline Wff instantiate(const AxiomSchema& schema, const Substitution& sigma) {
  std::vector<NodePtr> values;
  for (std::uint32_t i = 0; i < 3; ++i) {
    auto it = sigma.find(std::string(1, static_cast<char>('A' + i)));
    values.push_back(it == sigma.end() ? make_var(i) : it->second.node());
  }
  return Wff(substitute(schema.pattern.node(), values));
}

struct Justification {
  enum class Kind { Hypothesis, Axiom, MP };
  Kind kind = Kind::Hypothesis;
  std::size_t i = 0;  // hypothesis index (0-based) or MP antecedent line (1-based)
  std::size_t j = 0;  // MP implication line (1-based)
  std::string axiom;

  static Justification hypothesis(std::size_t index) { return {Kind::Hypothesis, index, 0, {}}; }
  static Justification axiom_named(std::string name) { return {Kind::Axiom, 0, 0, std::move(name)}; }
  static Justification mp(std::size_t antecedent, std::size_t implication) { return {Kind::MP, antecedent, implication, {}}; }
};

struct DerivationLine {
  Wff wff;
  Justification why;
};

struct Derivation {
  System system = System::QL;
  std::vector<Wff> hypotheses;
  std::vector<DerivationLine> lines;
};

/// Result of a successful check: hypotheses |- conclusion.
struct Verified {
  System system;
  std::vector<Wff> hypotheses;
  Wff conclusion;
};

/// Checks every line against its justification. Failures raise
/// BadHypothesisIndex, NotAnAxiomInstance or BadMP naming the line.
inline Verified verify_derivation(const Derivation& d) {
  if (d.lines.empty()) throw Error(ErrorKind::InvalidSpec, "derivation has no lines");
  for (std::size_t n = 0; n < d.lines.size(); ++n) {
    const auto& [wff, why] = d.lines[n];
    const auto where = "line " + std::to_string(n + 1) + ": ";
    switch (why.kind) {
      case Justification::Kind::Hypothesis:
        if (why.i >= d.hypotheses.size()) {
          throw Error(ErrorKind::BadHypothesisIndex, where + "no hypothesis " + std::to_string(why.i) + " (have " +
                                                         std::to_string(d.hypotheses.size()) + ")");
        }
        if (!(d.hypotheses[why.i] == wff)) {
          throw Error(ErrorKind::BadHypothesisIndex, where + "hypothesis " + std::to_string(why.i) + " is " +
                                                         to_string(d.hypotheses[why.i]) + ", not " + to_string(wff));
        }
        break;
      case Justification::Kind::Axiom: {
        const auto schema = find_axiom(d.system, why.axiom);
        if (!schema) {
          throw Error(ErrorKind::NotAnAxiomInstance,
                      where + "system " + std::string(to_string(d.system)) + " has no axiom '" + why.axiom + "'");
        }
        if (!match_schema(*schema, wff)) {
          throw Error(ErrorKind::NotAnAxiomInstance, where + to_string(wff) + " is not an instance of " + schema->name);
        }
        break;
      }
      case Justification::Kind::MP: {
        if (why.i < 1 || why.i > n || why.j < 1 || why.j > n) {
          throw Error(ErrorKind::BadMP, where + "mp " + std::to_string(why.i) + " " + std::to_string(why.j) +
                                            " must cite earlier lines");
        }
        const auto& antecedent = d.lines[why.i - 1].wff;
        const auto& imp = d.lines[why.j - 1].wff;
        const auto need = rule_implication(d.system);
        if (imp.op() != need) {
          throw Error(ErrorKind::BadMP, where + "line " + std::to_string(why.j) + " is not a " +
                                            detail::op_text(need, Sort::Wff, Notation::Ascii) + " implication in " +
                                            std::string(to_string(d.system)));
        }
        if (!detail::expand_equal(imp.lhs().node(), antecedent.node())) {
          throw Error(ErrorKind::BadMP, where + "antecedent of line " + std::to_string(why.j) + " is not line " +
                                            std::to_string(why.i));
        }
        if (!detail::expand_equal(imp.rhs().node(), wff.node())) {
          throw Error(ErrorKind::BadMP, where + "consequent of line " + std::to_string(why.j) + " is not " + to_string(wff));
        }
        break;
      }
    }
  }
  return {d.system, d.hypotheses, d.lines.back().wff};
}

// Derivation file format, one item per line, `#` comments:
//   system QL
//   hyp <k> <wff>                  hypothesis k (0-based, in order)
//   line <k> hyp <i> <wff>
//   line <k> axiom <NAME> <wff>
//   line <k> mp <i> <j> <wff>      i: antecedent line, j: implication line
inline Derivation parse_derivation(std::string_view text) {
  Derivation d;
  bool have_system = false;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto where = "line " + std::to_string(lineno) + " of derivation: ";
    std::istringstream words(detail::strip_comment(raw));
    std::string directive;
    if (!(words >> directive)) continue;
    auto number = [&](std::string_view what) {
      std::string tok;
      if (!(words >> tok) || tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorKind::SyntaxError, where + "expected " + std::string(what));
      }
      return static_cast<std::size_t>(std::stoull(tok));
    };
    auto formula = [&] {
      std::string rest;
      std::getline(words, rest);
      try {
        return parse_wff(rest);
      } catch (const Error& e) {
        throw Error(e.kind(), where + e.detail());
      }
    };
    if (directive == "system") {
      std::string name;
      words >> name;
      d.system = parse_system(name);
      have_system = true;
    } else if (directive == "hyp") {
      if (number("hypothesis index") != d.hypotheses.size()) {
        throw Error(ErrorKind::SyntaxError, where + "hypotheses must be numbered 0, 1, ... in order");
      }
      d.hypotheses.push_back(formula());
    } else if (directive == "line") {
      if (number("line number") != d.lines.size() + 1) {
        throw Error(ErrorKind::SyntaxError, where + "lines must be numbered 1, 2, ... in order");
      }
      std::string kind;
      words >> kind;
      Justification why;
      if (kind == "hyp") {
        why = Justification::hypothesis(number("hypothesis index"));
      } else if (kind == "axiom") {
        std::string name;
        if (!(words >> name)) throw Error(ErrorKind::SyntaxError, where + "expected axiom name");
        why = Justification::axiom_named(name);
      } else if (kind == "mp") {
        const auto i = number("antecedent line");
        why = Justification::mp(i, number("implication line"));
      } else {
        throw Error(ErrorKind::SyntaxError, where + "unknown justification '" + kind + "'");
      }
      d.lines.push_back({formula(), why});
    } else {
      throw Error(ErrorKind::SyntaxError, where + "unknown directive '" + directive + "'");
    }
  }
  if (!have_system) throw Error(ErrorKind::SyntaxError, "derivation lacks a 'system' line");
  return d;
}

inline Derivation load_derivation_file(const std::string& path) { return parse_derivation(detail::read_file(path)); }

inline std::string to_text(const Derivation& d) {
  std::string out = "system " + std::string(to_string(d.system)) + "\n";
  for (std::size_t k = 0; k < d.hypotheses.size(); ++k) out += "hyp " + std::to_string(k) + " " + to_string(d.hypotheses[k]) + "\n";
  for (std::size_t k = 0; k < d.lines.size(); ++k) {
    const auto& [wff, why] = d.lines[k];
    out += "line " + std::to_string(k + 1) + " ";
    switch (why.kind) {
      case Justification::Kind::Hypothesis: out += "hyp " + std::to_string(why.i); break;
      case Justification::Kind::Axiom: out += "axiom " + why.axiom; break;
      case Justification::Kind::MP: out += "mp " + std::to_string(why.i) + " " + std::to_string(why.j); break;
    }
    out += " " + to_string(wff) + "\n";
  }
  return out;
}

struct AxiomOutcome {
  std::string name;
  Wff instance;
  CheckResult result;
};

struct SoundnessReport {
  System system;
  std::string lattice;
  std::vector<AxiomOutcome> axioms;
  /// {A, A -> B} |= B with the system's rule implication.
  CheckResult rule;

  bool passed() const {
    return rule.passed && std::all_of(axioms.begin(), axioms.end(), [](const AxiomOutcome& a) { return a.result.passed; });
  }
};

/// Validity of every axiom (metavariables A, B, C as distinct p0, p1, p2) and
/// preservation of validity by the rule, on `L`.
inline SoundnessReport soundness_suite(System s, const FiniteOrtholattice& L, const CheckOptions& opts = {}) {
  SoundnessReport r{s, L.name(), {}, {}};
  for (const auto& a : axioms(s)) r.axioms.push_back({a.name, a.pattern, check_validity(L, a.pattern, opts)});
  const auto p0 = Wff::variable(0), p1 = Wff::variable(1);
  const std::vector<Wff> gamma{p0, Wff(make_node(rule_implication(s), p0.node(), p1.node()))};
  r.rule = check_consequence(L, gamma, p1, opts);
  return r;
}

}  // namespace olcheck
