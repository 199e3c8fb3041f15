#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "olcheck/error.hpp"

namespace olcheck {

/// Node kinds. Not, Or, variables and the two constants are primitive; the
/// rest are derived and unfold by definition.
enum class Connective : std::uint8_t {
  Var,
  Zero,
  One,
  Not,
  Or,
  And,
  Impl0,  // classical, also written ->c
  Impl1,  // Sasaki hook
  Impl2,  // Dishkant
  Impl3,  // Kalmbach
  Impl4,  // non-tollens
  Impl5,  // relevance
  EquivQ,
  EquivC,
};

constexpr int arity(Connective c) {
  switch (c) {
    case Connective::Var:
    case Connective::Zero:
    case Connective::One: return 0;
    case Connective::Not: return 1;
    default: return 2;
  }
}

constexpr bool is_primitive(Connective c) {
  return c == Connective::Var || c == Connective::Zero || c == Connective::One || c == Connective::Not ||
         c == Connective::Or;
}

constexpr Connective implication(int k) {
  switch (k) {
    case 0: return Connective::Impl0;
    case 1: return Connective::Impl1;
    case 2: return Connective::Impl2;
    case 3: return Connective::Impl3;
    case 4: return Connective::Impl4;
    case 5: return Connective::Impl5;
  }
  throw std::out_of_range("implication index must be 0..5");
}

constexpr int implication_index(Connective c) {
  switch (c) {
    case Connective::Impl0: return 0;
    case Connective::Impl1: return 1;
    case Connective::Impl2: return 2;
    case Connective::Impl3: return 3;
    case Connective::Impl4: return 4;
    case Connective::Impl5: return 5;
    default: return -1;
  }
}

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Connective op;
  std::uint32_t var = 0;
  NodePtr lhs;
  NodePtr rhs;
};

inline NodePtr make_node(Connective op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  return std::make_shared<const Node>(Node{op, 0, std::move(lhs), std::move(rhs)});
}

inline NodePtr make_var(std::uint32_t index) {
  return std::make_shared<const Node>(Node{Connective::Var, index, nullptr, nullptr});
}

inline bool structurally_equal(const Node& a, const Node& b) {
  if (&a == &b) return true;
  if (a.op != b.op) return false;
  switch (arity(a.op)) {
    case 0: return a.op != Connective::Var || a.var == b.var;
    case 1: return structurally_equal(*a.lhs, *b.lhs);
    default: return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
}

inline std::size_t node_count(const Node& n) {
  std::size_t count = 1;
  if (n.lhs) count += node_count(*n.lhs);
  if (n.rhs) count += node_count(*n.rhs);
  return count;
}

inline void collect_vars(const Node& n, std::set<std::uint32_t>& out) {
  if (n.op == Connective::Var) out.insert(n.var);
  if (n.lhs) collect_vars(*n.lhs, out);
  if (n.rhs) collect_vars(*n.rhs, out);
}

/// Replaces each variable i by `values[i]` (metavariable instantiation).
inline NodePtr substitute(const NodePtr& n, const std::vector<NodePtr>& values) {
  switch (arity(n->op)) {
    case 0:
      if (n->op != Connective::Var) return n;
      if (n->var >= values.size() || !values[n->var]) {
        throw Error(ErrorKind::UnboundVariable, "no value for variable #" + std::to_string(n->var));
      }
      return values[n->var];
    case 1: return make_node(n->op, substitute(n->lhs, values));
    default: return make_node(n->op, substitute(n->lhs, values), substitute(n->rhs, values));
  }
}

/// Wffs range over p0, p1, ... without constants; lattice terms over named
/// variables plus 0 and 1. Both share one node tree, so translating a wff
/// into a lattice term is a relabelling.
enum class Sort { Wff, Lattice };

template <Sort S>
class Term {
 public:
  explicit Term(NodePtr node) : node_(std::move(node)) {
    if (!node_) throw std::invalid_argument("null term");
  }

  static Term variable(std::uint32_t index) { return Term(make_var(index)); }
  static Term zero()
    requires(S == Sort::Lattice)
  {
    return Term(make_node(Connective::Zero));
  }
  static Term one()
    requires(S == Sort::Lattice)
  {
    return Term(make_node(Connective::One));
  }

  Connective op() const noexcept { return node_->op; }
  std::uint32_t var() const noexcept { return node_->var; }
  Term lhs() const { return Term(node_->lhs); }
  Term rhs() const { return Term(node_->rhs); }
  const NodePtr& node() const noexcept { return node_; }

  std::set<std::uint32_t> variables() const {
    std::set<std::uint32_t> out;
    collect_vars(*node_, out);
    return out;
  }
  std::size_t size() const { return node_count(*node_); }

  friend bool operator==(const Term& a, const Term& b) { return structurally_equal(*a.node_, *b.node_); }

 private:
  NodePtr node_;
};

using Wff = Term<Sort::Wff>;
using LatticeTerm = Term<Sort::Lattice>;

template <Sort S>
Term<S> neg(const Term<S>& a) {
  return Term<S>(make_node(Connective::Not, a.node()));
}
template <Sort S>
Term<S> disj(const Term<S>& a, const Term<S>& b) {
  return Term<S>(make_node(Connective::Or, a.node(), b.node()));
}
template <Sort S>
Term<S> conj(const Term<S>& a, const Term<S>& b) {
  return Term<S>(make_node(Connective::And, a.node(), b.node()));
}
template <Sort S>
Term<S> impl(int k, const Term<S>& a, const Term<S>& b) {
  return Term<S>(make_node(implication(k), a.node(), b.node()));
}
template <Sort S>
Term<S> equiv_q(const Term<S>& a, const Term<S>& b) {
  return Term<S>(make_node(Connective::EquivQ, a.node(), b.node()));
}
template <Sort S>
Term<S> equiv_c(const Term<S>& a, const Term<S>& b) {
  return Term<S>(make_node(Connective::EquivC, a.node(), b.node()));
}

template <Sort S>
Term<S> operator~(const Term<S>& a) {
  return neg(a);
}
template <Sort S>
Term<S> operator|(const Term<S>& a, const Term<S>& b) {
  return disj(a, b);
}
template <Sort S>
Term<S> operator&(const Term<S>& a, const Term<S>& b) {
  return conj(a, b);
}

/// One definitional step at the root; children are left untouched. Derived
/// nodes below the root are not expanded. The ->2 and ->4 definitions
/// (b' ->1 a', b' ->3 a') are written with double complements cancelled.
inline NodePtr unfold(Sort sort, const NodePtr& n) {
  using C = Connective;
  const auto& a = n->lhs;
  const auto& b = n->rhs;
  auto NOT = [](NodePtr x) { return make_node(C::Not, std::move(x)); };
  auto OR = [](NodePtr x, NodePtr y) { return make_node(C::Or, std::move(x), std::move(y)); };
  auto AND = [](NodePtr x, NodePtr y) { return make_node(C::And, std::move(x), std::move(y)); };
  switch (n->op) {
    case C::And: return NOT(OR(NOT(a), NOT(b)));
    case C::Impl0: return OR(NOT(a), b);
    case C::Impl1: return OR(NOT(a), AND(a, b));
    case C::Impl2: return OR(b, AND(NOT(b), NOT(a)));
    case C::Impl3: return OR(OR(AND(NOT(a), NOT(b)), AND(NOT(a), b)), AND(a, OR(NOT(a), b)));
    case C::Impl4: return OR(OR(AND(b, a), AND(b, NOT(a))), AND(NOT(b), OR(b, NOT(a))));
    case C::Impl5: return OR(OR(AND(a, b), AND(NOT(a), b)), AND(NOT(a), NOT(b)));
    case C::EquivQ:
      if (sort == Sort::Wff) return OR(AND(NOT(a), NOT(b)), AND(a, b));
      return OR(AND(a, b), AND(NOT(a), NOT(b)));
    case C::EquivC:
      if (sort == Sort::Wff) return AND(OR(NOT(b), a), OR(NOT(a), b));
      return AND(OR(NOT(a), b), OR(NOT(b), a));
    default: return n;
  }
}

inline NodePtr expand_node(Sort sort, const NodePtr& n) {
  if (is_primitive(n->op)) {
    switch (arity(n->op)) {
      case 0: return n;
      case 1: {
        auto a = expand_node(sort, n->lhs);
        return a == n->lhs ? n : make_node(n->op, std::move(a));
      }
      default: {
        auto a = expand_node(sort, n->lhs);
        auto b = expand_node(sort, n->rhs);
        return a == n->lhs && b == n->rhs ? n : make_node(n->op, std::move(a), std::move(b));
      }
    }
  }
  return expand_node(sort, unfold(sort, n));
}

/// Primitive-only form: negation, disjunction, variables and constants.
template <Sort S>
Term<S> expand(const Term<S>& t) {
  return Term<S>(expand_node(S, t.node()));
}

/// Same tree, other namespace: p_i becomes lattice variable i and every
/// connective keeps its counterpart.
inline LatticeTerm translate(const Wff& w) { return LatticeTerm(w.node()); }

}  // namespace olcheck
