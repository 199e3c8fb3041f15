#pragma once

#include <cctype>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "olcheck/error.hpp"
#include "olcheck/term.hpp"

namespace olcheck {

// Surface syntax, weakest to strongest binding:
//
//   ->0 .. ->5, ->c        implications (non-associative)
//   ==q, ==c               equivalences (non-associative)
//   v                      disjunction / join (left-associative)
//   ^                      conjunction / meet (left-associative)
//   ~x, x'                 negation / orthocomplement
//
// Wff variables are p0, p1, ...; lattice terms use identifiers plus the
// constants 0 and 1. `v` is reserved. An equation `t = s` is parsed by
// parse_equation.

namespace detail {

enum class Tok { Ident, Zero, One, Tilde, Prime, Or, And, Impl, Equiv, LParen, RParen, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  Connective op = Connective::Var;
  std::size_t column = 0;  // 1-based
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto fail = [&](std::size_t at, const std::string& msg) -> Error {
    return Error(ErrorKind::SyntaxError, "column " + std::to_string(at + 1) + ": " + msg);
  };
  while (i < src.size()) {
    const char c = src[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string word(src.substr(i, j - i));
      out.push_back({word == "v" ? Tok::Or : Tok::Ident, word, Connective::Var, col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      const auto word = src.substr(i, j - i);
      if (word != "0" && word != "1") throw fail(i, "only the constants 0 and 1 are numeric");
      out.push_back({word == "0" ? Tok::Zero : Tok::One, std::string(word), Connective::Var, col});
      i = j;
    } else if (c == '~') {
      out.push_back({Tok::Tilde, "~", Connective::Not, col});
      ++i;
    } else if (c == '\'') {
      out.push_back({Tok::Prime, "'", Connective::Not, col});
      ++i;
    } else if (c == '^') {
      out.push_back({Tok::And, "^", Connective::And, col});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", Connective::Var, col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", Connective::Var, col});
      ++i;
    } else if (src.substr(i, 2) == "->") {
      if (i + 2 >= src.size()) throw fail(i, "'->' needs a kind: 0-5 or c");
      const char k = src[i + 2];
      if (k == 'c') {
        out.push_back({Tok::Impl, "->c", Connective::Impl0, col});
      } else if (k >= '0' && k <= '5') {
        out.push_back({Tok::Impl, std::string(src.substr(i, 3)), implication(k - '0'), col});
      } else {
        throw fail(i, "'->' needs a kind: 0-5 or c");
      }
      i += 3;
    } else if (src.substr(i, 2) == "==") {
      if (i + 2 >= src.size() || (src[i + 2] != 'q' && src[i + 2] != 'c')) throw fail(i, "'==' needs a kind: q or c");
      out.push_back({Tok::Equiv, std::string(src.substr(i, 3)), src[i + 2] == 'q' ? Connective::EquivQ : Connective::EquivC,
                     col});
      i += 3;
    } else if (c == '=') {
      out.push_back({Tok::Equals, "=", Connective::Var, col});
      ++i;
    } else {
      throw fail(i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", Connective::Var, src.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, Sort sort, std::vector<std::string>* names, bool allow_new_names)
      : toks_(lex(src)), sort_(sort), names_(names), allow_new_(allow_new_names) {}

  NodePtr expression() { return implication_level(); }

  const Token& peek() const { return toks_[pos_]; }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw error(std::string("expected ") + what);
    ++pos_;
  }
  Error error(const std::string& msg) const {
    const auto& t = peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    return Error(ErrorKind::SyntaxError, "column " + std::to_string(t.column) + ": " + msg + ", found " + found);
  }

 private:
  NodePtr implication_level() {
    auto lhs = equivalence_level();
    if (peek().kind != Tok::Impl) return lhs;
    const auto op = toks_[pos_++].op;
    auto rhs = equivalence_level();
    if (peek().kind == Tok::Impl) {
      throw Error(ErrorKind::AmbiguousChain,
                  "column " + std::to_string(peek().column) + ": implication chains need parentheses");
    }
    return make_node(op, std::move(lhs), std::move(rhs));
  }

  NodePtr equivalence_level() {
    auto lhs = or_level();
    if (peek().kind != Tok::Equiv) return lhs;
    const auto op = toks_[pos_++].op;
    auto rhs = or_level();
    if (peek().kind == Tok::Equiv) {
      throw Error(ErrorKind::AmbiguousChain,
                  "column " + std::to_string(peek().column) + ": equivalence chains need parentheses");
    }
    return make_node(op, std::move(lhs), std::move(rhs));
  }

  NodePtr or_level() {
    auto lhs = and_level();
    while (peek().kind == Tok::Or) {
      ++pos_;
      lhs = make_node(Connective::Or, std::move(lhs), and_level());
    }
    return lhs;
  }

  NodePtr and_level() {
    auto lhs = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      lhs = make_node(Connective::And, std::move(lhs), unary());
    }
    return lhs;
  }

  NodePtr unary() {
    if (peek().kind == Tok::Tilde) {
      ++pos_;
      return make_node(Connective::Not, unary());
    }
    auto n = atom();
    while (peek().kind == Tok::Prime) {
      ++pos_;
      n = make_node(Connective::Not, std::move(n));
    }
    return n;
  }

  NodePtr atom() {
    const auto& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        ++pos_;
        auto inner = implication_level();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Zero:
      case Tok::One:
        if (sort_ == Sort::Wff) throw error("constants are not wffs");
        ++pos_;
        return make_node(t.kind == Tok::Zero ? Connective::Zero : Connective::One);
      case Tok::Ident: {
        auto v = variable(t);
        ++pos_;
        return make_var(v);
      }
      default: throw error("expected a variable, constant or '('");
    }
  }

  std::uint32_t variable(const Token& t) {
    if (sort_ == Sort::Wff) {
      const auto& w = t.text;
      bool ok = w.size() >= 2 && w[0] == 'p' && w.size() <= 10;
      for (std::size_t i = 1; ok && i < w.size(); ++i) ok = std::isdigit(static_cast<unsigned char>(w[i])) != 0;
      if (!ok) throw error("wff variables are p0, p1, ...");
      return static_cast<std::uint32_t>(std::stoul(w.substr(1)));
    }
    for (std::size_t i = 0; i < names_->size(); ++i) {
      if ((*names_)[i] == t.text) return static_cast<std::uint32_t>(i);
    }
    if (!allow_new_) {
      throw Error(ErrorKind::UnboundVariable,
                  "column " + std::to_string(t.column) + ": undeclared variable '" + t.text + "'");
    }
    names_->push_back(t.text);
    return static_cast<std::uint32_t>(names_->size() - 1);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Sort sort_;
  std::vector<std::string>* names_;
  bool allow_new_;
};

}  // namespace detail

inline Wff parse_wff(std::string_view text) {
  detail::Parser p(text, Sort::Wff, nullptr, false);
  auto n = p.expression();
  if (p.peek().kind != detail::Tok::End) throw p.error("unexpected trailing input");
  return Wff(std::move(n));
}

/// Parses a lattice term; identifiers are resolved against `names`, and new
/// ones are appended unless `allow_new_names` is false.
inline LatticeTerm parse_term(std::string_view text, std::vector<std::string>& names, bool allow_new_names = true) {
  detail::Parser p(text, Sort::Lattice, &names, allow_new_names);
  auto n = p.expression();
  if (p.peek().kind != detail::Tok::End) throw p.error("unexpected trailing input");
  return LatticeTerm(std::move(n));
}

struct ParsedTerm {
  LatticeTerm term;
  std::vector<std::string> names;
};

inline ParsedTerm parse_term(std::string_view text) {
  std::vector<std::string> names;
  auto t = parse_term(text, names);
  return {std::move(t), std::move(names)};
}

struct Equation {
  LatticeTerm lhs;
  LatticeTerm rhs;
};

/// `t = s` over lattice terms.
inline Equation parse_equation(std::string_view text, std::vector<std::string>& names, bool allow_new_names = true) {
  detail::Parser p(text, Sort::Lattice, &names, allow_new_names);
  auto lhs = p.expression();
  p.expect(detail::Tok::Equals, "'='");
  auto rhs = p.expression();
  if (p.peek().kind != detail::Tok::End) throw p.error("unexpected trailing input");
  return {LatticeTerm(std::move(lhs)), LatticeTerm(std::move(rhs))};
}

// ---------------------------------------------------------------------------
// Printing

enum class Notation { Ascii, Unicode };

namespace detail {

constexpr int precedence(Connective c) {
  switch (c) {
    case Connective::Var:
    case Connective::Zero:
    case Connective::One: return 6;
    case Connective::Not: return 5;
    case Connective::And: return 4;
    case Connective::Or: return 3;
    case Connective::EquivQ:
    case Connective::EquivC: return 2;
    default: return 1;
  }
}

inline std::string op_text(Connective c, Sort sort, Notation notation) {
  const bool u = notation == Notation::Unicode;
  const bool wff = sort == Sort::Wff;
  switch (c) {
    case Connective::Or: return u ? (wff ? "∨" : "∪") : "v";
    case Connective::And: return u ? (wff ? "∧" : "∩") : "^";
    case Connective::EquivQ: return u ? "≡q" : "==q";
    case Connective::EquivC: return u ? "≡c" : "==c";
    case Connective::Impl0:
      if (wff) return u ? "→c" : "->c";
      return u ? "→₀" : "->0";
    default: {
      static const char* const subs[] = {"₀", "₁", "₂", "₃", "₄", "₅"};
      const int k = implication_index(c);
      return u ? std::string("→") + subs[k] : "->" + std::to_string(k);
    }
  }
}

class Printer {
 public:
  Printer(Sort sort, Notation notation, std::span<const std::string> names)
      : sort_(sort), notation_(notation), names_(names) {}

  std::string print(const Node& n) const {
    switch (n.op) {
      case Connective::Var: return var_name(n.var);
      case Connective::Zero: return "0";
      case Connective::One: return "1";
      case Connective::Not: {
        const auto inner = wrap(*n.lhs, precedence(n.lhs->op) < 5);
        if (sort_ == Sort::Wff) return (notation_ == Notation::Unicode ? "¬" : "~") + inner;
        return inner + (notation_ == Notation::Unicode ? "′" : "'");
      }
      default: {
        const int p = precedence(n.op);
        const bool assoc = n.op == Connective::Or || n.op == Connective::And;
        const int pl = precedence(n.lhs->op);
        const int pr = precedence(n.rhs->op);
        return wrap(*n.lhs, pl < p || (pl == p && !assoc)) + " " + op_text(n.op, sort_, notation_) + " " +
               wrap(*n.rhs, pr <= p);
      }
    }
  }

 private:
  std::string wrap(const Node& n, bool parens) const { return parens ? "(" + print(n) + ")" : print(n); }

  std::string var_name(std::uint32_t v) const {
    if (sort_ == Sort::Wff) return "p" + std::to_string(v);
    if (v < names_.size()) return names_[v];
    return "a" + std::to_string(v);
  }

  Sort sort_;
  Notation notation_;
  std::span<const std::string> names_;
};

}  // namespace detail

/// Canonical text with minimal parentheses; parse(to_string(t)) == t.
inline std::string to_string(const Wff& w, Notation notation = Notation::Ascii) {
  return detail::Printer(Sort::Wff, notation, {}).print(*w.node());
}

/// Lattice variables print as names[i], or a<i> past the end of `names`.
inline std::string to_string(const LatticeTerm& t, std::span<const std::string> names = {},
                             Notation notation = Notation::Ascii) {
  return detail::Printer(Sort::Lattice, notation, names).print(*t.node());
}

}  // namespace olcheck
