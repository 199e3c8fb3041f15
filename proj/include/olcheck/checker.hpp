#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "olcheck/conditions.hpp"
#include "olcheck/error.hpp"
#include "olcheck/lattice.hpp"
#include "olcheck/syntax.hpp"
#include "olcheck/term.hpp"

namespace olcheck {

/// Element assigned to each variable slot, indexed by slot.
using Valuation = std::vector<Element>;

/// A term flattened to postfix form for repeated evaluation. Derived
/// connectives are evaluated directly from the lattice tables, not through
/// their unfolded definitions.
class CompiledTerm {
 public:
  explicit CompiledTerm(const NodePtr& root) {
    int depth = 0;
    compile(*root, depth);
  }

  /// Number of variable slots the term reads (largest index + 1).
  std::size_t arity() const noexcept { return arity_; }

  Element eval(const FiniteOrtholattice& L, std::span<const Element> v) const {
    if (v.size() < arity_) {
      throw Error(ErrorKind::UnboundVariable, "valuation covers " + std::to_string(v.size()) + " variables, term needs " +
                                                  std::to_string(arity_));
    }
    if (max_depth_ <= kInlineStack) {
      std::array<Element, kInlineStack> stack;
      return run(L, v, stack.data());
    }
    std::vector<Element> stack(max_depth_);
    return run(L, v, stack.data());
  }

 private:
  static constexpr std::size_t kInlineStack = 64;

  struct Instr {
    Connective op;
    std::uint32_t var;
  };

  void compile(const Node& n, int& depth) {
    if (n.lhs) compile(*n.lhs, depth);
    if (n.rhs) compile(*n.rhs, depth);
    code_.push_back({n.op, n.var});
    if (n.op == Connective::Var) arity_ = std::max<std::size_t>(arity_, n.var + std::size_t{1});
    depth += 1 - olcheck::arity(n.op);
    max_depth_ = std::max<std::size_t>(max_depth_, static_cast<std::size_t>(depth));
  }

  Element run(const FiniteOrtholattice& L, std::span<const Element> v, Element* stack) const {
    std::size_t sp = 0;
    for (const auto& ins : code_) {
      using C = Connective;
      if (olcheck::arity(ins.op) == 0) {
        stack[sp++] = ins.op == C::Var ? v[ins.var] : ins.op == C::Zero ? L.bottom() : L.top();
        continue;
      }
      if (ins.op == C::Not) {
        stack[sp - 1] = L.ortho(stack[sp - 1]);
        continue;
      }
      const Element b = stack[--sp];
      const Element a = stack[sp - 1];
      const Element na = L.ortho(a), nb = L.ortho(b);
      Element r = 0;
      switch (ins.op) {
        case C::Or: r = L.join(a, b); break;
        case C::And: r = L.meet(a, b); break;
        case C::Impl0: r = L.join(na, b); break;
        case C::Impl1: r = L.join(na, L.meet(a, b)); break;
        case C::Impl2: r = L.join(b, L.meet(nb, na)); break;
        case C::Impl3: r = L.join(L.join(L.meet(na, nb), L.meet(na, b)), L.meet(a, L.join(na, b))); break;
        case C::Impl4: r = L.join(L.join(L.meet(b, a), L.meet(b, na)), L.meet(nb, L.join(b, na))); break;
        case C::Impl5: r = L.join(L.join(L.meet(a, b), L.meet(na, b)), L.meet(na, nb)); break;
        case C::EquivQ: r = L.join(L.meet(a, b), L.meet(na, nb)); break;
        case C::EquivC: r = L.meet(L.join(na, b), L.join(nb, a)); break;
        default: break;
      }
      stack[sp - 1] = r;
    }
    return stack[0];
  }

  std::vector<Instr> code_;
  std::size_t arity_ = 0;
  std::size_t max_depth_ = 0;
};

/// Structural fold of `t` through the tables of `L`.
template <Sort S>
Element eval(const Term<S>& t, const FiniteOrtholattice& L, std::span<const Element> v) {
  return CompiledTerm(t.node()).eval(L, v);
}

/// The |L|^k valuations of k variables in lexicographic order of element
/// indices (first variable varies slowest).
class ValuationSequence {
 public:
  ValuationSequence(std::size_t lattice_size, std::size_t k) : n_(lattice_size), k_(k) {}

  std::uint64_t count() const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      if (total > std::numeric_limits<std::uint64_t>::max() / std::max<std::size_t>(n_, 1)) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      total *= n_;
    }
    return total;
  }

  /// Valuation with lexicographic rank `rank`.
  Valuation at(std::uint64_t rank) const {
    Valuation v(k_);
    for (std::size_t i = k_; i-- > 0;) {
      v[i] = static_cast<Element>(rank % n_);
      rank /= n_;
    }
    return v;
  }

  class iterator {
   public:
    using value_type = Valuation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::size_t n, Valuation v, bool done) : n_(n), v_(std::move(v)), done_(done) {}

    const Valuation& operator*() const { return v_; }
    iterator& operator++() {
      done_ = !advance(v_, n_);
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || v_ == o.v_); }

   private:
    std::size_t n_ = 0;
    Valuation v_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, Valuation(k_, 0), n_ == 0 && k_ > 0); }
  iterator end() const { return iterator(n_, {}, true); }

  /// Odometer step; false once the sequence is exhausted.
  static bool advance(Valuation& v, std::size_t n) {
    for (std::size_t i = v.size(); i-- > 0;) {
      if (++v[i] < n) return true;
      v[i] = 0;
    }
    return false;
  }

 private:
  std::size_t n_;
  std::size_t k_;
};

inline ValuationSequence enumerate_valuations(const FiniteOrtholattice& L, std::size_t k) {
  return ValuationSequence(L.size(), k);
}

struct CheckOptions {
  unsigned jobs = 1;
  std::uint64_t budget = 100'000'000;  // valuations per check
};

struct CheckResult {
  bool passed = true;
  std::vector<std::string> var_names;
  std::optional<Valuation> witness;
  /// Evaluated sides at the witness, e.g. {"lhs", x}, {"rhs", y}.
  std::vector<std::pair<std::string, Element>> values;
  /// Valuations examined in lexicographic order: up to and including the
  /// witness on failure, all of them on success.
  std::uint64_t scanned = 0;
};

/// `a=x b=y` rendering of a witness.
inline std::string witness_text(const FiniteOrtholattice& L, const CheckResult& r) {
  std::string out;
  if (!r.witness) return out;
  for (std::size_t i = 0; i < r.witness->size(); ++i) {
    if (i) out += ' ';
    out += r.var_names.at(i) + "=" + L.label((*r.witness)[i]);
  }
  return out;
}

namespace detail {

/// Rank of the lexicographically first valuation on which `holds` is false.
/// With several jobs the range is split into contiguous blocks; each worker
/// stops at its first violation (or once it passes a lower one found
/// elsewhere) and the least rank wins.
template <class Holds>
std::optional<std::uint64_t> first_violation(std::size_t n, std::size_t k, const Holds& holds, const CheckOptions& opts) {
  const ValuationSequence seq(n, k);
  const auto total = seq.count();
  if (total > opts.budget) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(n) + "^" + std::to_string(k) +
                                               " valuations exceed the budget of " + std::to_string(opts.budget));
  }
  if (total == 0) return std::nullopt;

  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    Valuation v = seq.at(lo);
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
      if (rank > best.load(std::memory_order_relaxed)) return;
      if (!holds(std::span<const Element>(v))) {
        auto cur = best.load();
        while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
        }
        return;
      }
      ValuationSequence::advance(v, n);
    }
  };

  const std::uint64_t jobs = std::clamp<std::uint64_t>(opts.jobs, 1, std::max<std::uint64_t>(1, total / 64));
  if (jobs <= 1) {
    scan(0, total);
  } else {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (std::uint64_t j = 0; j < jobs; ++j) {
      const auto lo = j * chunk;
      const auto hi = std::min(total, lo + chunk);
      if (lo < hi) workers.emplace_back(scan, lo, hi);
    }
  }
  const auto found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

inline std::vector<std::string> slot_names(std::span<const std::string> names, std::size_t k) {
  std::vector<std::string> out(names.begin(), names.end());
  for (std::size_t i = out.size(); i < k; ++i) out.push_back("a" + std::to_string(i));
  out.resize(std::max(k, names.size()));
  return out;
}

inline NodePtr rename_vars(const NodePtr& n, const std::vector<std::uint32_t>& slot_of) {
  switch (arity(n->op)) {
    case 0: return n->op == Connective::Var ? make_var(slot_of.at(n->var)) : n;
    case 1: return make_node(n->op, rename_vars(n->lhs, slot_of));
    default: return make_node(n->op, rename_vars(n->lhs, slot_of), rename_vars(n->rhs, slot_of));
  }
}

struct WffSlots {
  std::vector<std::string> names;
  std::vector<std::uint32_t> slot_of;  // wff variable index -> slot
};

inline WffSlots wff_slots(std::span<const Wff> wffs) {
  std::set<std::uint32_t> used;
  for (const auto& w : wffs) collect_vars(*w.node(), used);
  WffSlots s;
  if (!used.empty()) s.slot_of.assign(*used.rbegin() + std::size_t{1}, 0);
  for (auto v : used) {
    s.slot_of[v] = static_cast<std::uint32_t>(s.names.size());
    s.names.push_back("p" + std::to_string(v));
  }
  return s;
}

}  // namespace detail

/// Pass iff lhs and rhs agree under every valuation of the variables.
inline CheckResult check_identity(const FiniteOrtholattice& L, const LatticeTerm& lhs, const LatticeTerm& rhs,
                                  std::span<const std::string> names = {}, const CheckOptions& opts = {}) {
  const CompiledTerm cl(lhs.node()), cr(rhs.node());
  const auto k = std::max({cl.arity(), cr.arity(), names.size()});
  CheckResult r;
  r.var_names = detail::slot_names(names, k);
  const auto hit = detail::first_violation(
      L.size(), k, [&](std::span<const Element> v) { return cl.eval(L, v) == cr.eval(L, v); }, opts);
  if (!hit) {
    r.scanned = ValuationSequence(L.size(), k).count();
    return r;
  }
  r.passed = false;
  r.scanned = *hit + 1;
  r.witness = ValuationSequence(L.size(), k).at(*hit);
  r.values = {{"lhs", cl.eval(L, *r.witness)}, {"rhs", cr.eval(L, *r.witness)}};
  if (r.values[0].second == r.values[1].second) throw Error(ErrorKind::InternalInconsistency, "witness does not violate");
  return r;
}

/// Pass iff every valuation satisfying all premises satisfies the conclusion.
/// Premises are tested in declaration order and short-circuit.
inline CheckResult check_horn(const FiniteOrtholattice& L, const HornCondition& c, const CheckOptions& opts = {}) {
  if (c.is_identity()) return check_identity(L, c.conclusion.lhs, c.conclusion.rhs, c.vars, opts);
  std::vector<std::pair<CompiledTerm, CompiledTerm>> premises;
  std::size_t k = c.vars.size();
  for (const auto& p : c.premises) {
    premises.emplace_back(CompiledTerm(p.lhs.node()), CompiledTerm(p.rhs.node()));
    k = std::max({k, premises.back().first.arity(), premises.back().second.arity()});
  }
  const CompiledTerm cl(c.conclusion.lhs.node()), cr(c.conclusion.rhs.node());
  k = std::max({k, cl.arity(), cr.arity()});

  auto holds = [&](std::span<const Element> v) {
    for (const auto& [pl, pr] : premises) {
      if (pl.eval(L, v) != pr.eval(L, v)) return true;
    }
    return cl.eval(L, v) == cr.eval(L, v);
  };
  CheckResult r;
  r.var_names = detail::slot_names(c.vars, k);
  const auto hit = detail::first_violation(L.size(), k, holds, opts);
  if (!hit) {
    r.scanned = ValuationSequence(L.size(), k).count();
    return r;
  }
  r.passed = false;
  r.scanned = *hit + 1;
  r.witness = ValuationSequence(L.size(), k).at(*hit);
  const auto& w = *r.witness;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    const auto tag = "premise" + std::to_string(i + 1);
    r.values.emplace_back(tag + ".lhs", premises[i].first.eval(L, w));
    r.values.emplace_back(tag + ".rhs", premises[i].second.eval(L, w));
  }
  r.values.emplace_back("conclusion.lhs", cl.eval(L, w));
  r.values.emplace_back("conclusion.rhs", cr.eval(L, w));
  if (holds(w)) throw Error(ErrorKind::InternalInconsistency, "witness does not violate " + c.name);
  return r;
}

/// Pass iff every wff in `gamma` evaluating to 1 forces `a` to 1. Only the
/// variables that occur are enumerated; with empty `gamma` this is validity.
inline CheckResult check_consequence(const FiniteOrtholattice& L, std::span<const Wff> gamma, const Wff& a,
                                     const CheckOptions& opts = {}) {
  std::vector<Wff> all(gamma.begin(), gamma.end());
  all.push_back(a);
  const auto slots = detail::wff_slots(all);
  std::vector<CompiledTerm> hyps;
  for (const auto& g : gamma) hyps.emplace_back(detail::rename_vars(g.node(), slots.slot_of));
  const CompiledTerm goal(detail::rename_vars(a.node(), slots.slot_of));
  const auto k = slots.names.size();
  const auto top = L.top();

  auto holds = [&](std::span<const Element> v) {
    for (const auto& h : hyps) {
      if (h.eval(L, v) != top) return true;
    }
    return goal.eval(L, v) == top;
  };
  CheckResult r;
  r.var_names = slots.names;
  const auto hit = detail::first_violation(L.size(), k, holds, opts);
  if (!hit) {
    r.scanned = ValuationSequence(L.size(), k).count();
    return r;
  }
  r.passed = false;
  r.scanned = *hit + 1;
  r.witness = ValuationSequence(L.size(), k).at(*hit);
  for (std::size_t i = 0; i < hyps.size(); ++i) r.values.emplace_back("hyp" + std::to_string(i + 1), hyps[i].eval(L, *r.witness));
  r.values.emplace_back(gamma.empty() ? "value" : "conclusion", goal.eval(L, *r.witness));
  if (holds(*r.witness)) throw Error(ErrorKind::InternalInconsistency, "witness does not violate");
  return r;
}

/// Pass iff h(a) = 1 for every valuation h.
inline CheckResult check_validity(const FiniteOrtholattice& L, const Wff& a, const CheckOptions& opts = {}) {
  return check_consequence(L, {}, a, opts);
}

}  // namespace olcheck
