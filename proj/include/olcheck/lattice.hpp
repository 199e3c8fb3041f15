#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "olcheck/error.hpp"

namespace olcheck {

/// Index of an element inside one FiniteOrtholattice. Indices follow the
/// declaration order of the source description, so "first witness" results
/// are reproducible.
using Element = std::uint16_t;

/// A lattice as described by its Hasse diagram: labelled vertices, cover
/// edges (lower, upper) and the orthocomplement pairing.
struct HasseSpec {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::pair<std::string, std::string>> ortho;
};

/// Family of subsets of a finite universe, ordered by inclusion, with set
/// complement as orthocomplement.
struct SubsetFamilySpec {
  std::string name;
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> family;
};

class FiniteOrtholattice;

namespace detail {
FiniteOrtholattice assemble(std::string name, std::vector<std::string> labels,
                            std::vector<std::uint8_t> leq, std::vector<Element> ortho);
}

/// Immutable finite ortholattice with precomputed order, meet, join and
/// orthocomplement tables. Only obtainable through the build functions, which
/// verify every ortholattice law before returning.
class FiniteOrtholattice {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element e) const { return labels_.at(e); }

  std::optional<Element> find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Element>(it - labels_.begin());
  }

  Element at(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw Error(ErrorKind::InvalidSpec, "lattice " + name_ + " has no element '" + std::string(label) + "'");
  }

  bool leq(Element a, Element b) const noexcept { return leq_[idx(a, b)] != 0; }
  Element meet(Element a, Element b) const noexcept { return meet_[idx(a, b)]; }
  Element join(Element a, Element b) const noexcept { return join_[idx(a, b)]; }
  Element ortho(Element a) const noexcept { return ortho_[a]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  /// Hasse edges (a, b) with a covered by b, in index order.
  std::vector<std::pair<Element, Element>> covers() const {
    std::vector<std::pair<Element, Element>> out;
    const auto n = size();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (a == b || !leq(a, b)) continue;
        bool direct = true;
        for (Element c = 0; c < n && direct; ++c) {
          if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
        }
        if (direct) out.emplace_back(a, b);
      }
    }
    return out;
  }

  /// The sub-ortholattice on `elements` (kept in the given order). Throws
  /// InvalidSpec unless the set is closed under meet, join and orthocomplement.
  FiniteOrtholattice subalgebra(std::span<const Element> elements, std::string name) const {
    std::vector<int> pos(size(), -1);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] >= size() || pos[elements[i]] != -1) {
        throw Error(ErrorKind::InvalidSpec, "subalgebra elements must be distinct members of " + name_);
      }
      pos[elements[i]] = static_cast<int>(i);
    }
    const auto m = elements.size();
    std::vector<std::string> labels;
    std::vector<std::uint8_t> leq(m * m);
    std::vector<Element> ortho(m);
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back(labels_[elements[i]]);
      const auto o = ortho_[elements[i]];
      if (pos[o] < 0) throw Error(ErrorKind::InvalidSpec, "subset not closed under orthocomplement at " + labels_[elements[i]]);
      ortho[i] = static_cast<Element>(pos[o]);
      for (std::size_t j = 0; j < m; ++j) {
        leq[i * m + j] = leq_[idx(elements[i], elements[j])];
        if (pos[meet(elements[i], elements[j])] < 0 || pos[join(elements[i], elements[j])] < 0) {
          throw Error(ErrorKind::InvalidSpec, "subset not closed under meet/join at (" + labels_[elements[i]] + ", " +
                                                  labels_[elements[j]] + ")");
        }
      }
    }
    return detail::assemble(std::move(name), std::move(labels), std::move(leq), std::move(ortho));
  }

 private:
  friend FiniteOrtholattice detail::assemble(std::string, std::vector<std::string>, std::vector<std::uint8_t>,
                                             std::vector<Element>);
  FiniteOrtholattice() = default;

  std::size_t idx(Element a, Element b) const noexcept { return std::size_t{a} * labels_.size() + b; }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Element> ortho_;
  Element bottom_ = 0;
  Element top_ = 0;
};

namespace detail {

inline std::string pair_text(const std::vector<std::string>& labels, std::size_t a, std::size_t b) {
  return "(" + labels[a] + ", " + labels[b] + ")";
}

/// Common back end of every constructor: derives bounds and glb/lub tables
/// from the order, then checks the orthocomplement. `leq` must already be a
/// partial order.
inline FiniteOrtholattice assemble(std::string name, std::vector<std::string> labels, std::vector<std::uint8_t> leq,
                                   std::vector<Element> ortho) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "lattice " + name + " has no elements");
  if (n > 0xFFFF) throw Error(ErrorKind::InvalidSpec, "lattice " + name + " is too large");
  auto le = [&](std::size_t a, std::size_t b) { return leq[a * n + b] != 0; };

  std::optional<std::size_t> bottom, top;
  for (std::size_t a = 0; a < n; ++a) {
    bool below_all = true, above_all = true;
    for (std::size_t b = 0; b < n; ++b) {
      below_all = below_all && le(a, b);
      above_all = above_all && le(b, a);
    }
    if (below_all && !bottom) bottom = a;
    if (above_all && !top) top = a;
  }
  if (!bottom) throw Error(ErrorKind::NoBottom, "lattice " + name + " has no least element");
  if (!top) throw Error(ErrorKind::NoTop, "lattice " + name + " has no greatest element");

  FiniteOrtholattice L;
  L.meet_.assign(n * n, 0);
  L.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> glb, lub;
      bool glb_ok = false, lub_ok = false;
      for (std::size_t c = 0; c < n; ++c) {
        if (le(c, a) && le(c, b)) {
          bool greatest = true;
          for (std::size_t d = 0; d < n && greatest; ++d) {
            if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
          }
          if (greatest) glb = c, glb_ok = true;
        }
        if (le(a, c) && le(b, c)) {
          bool least = true;
          for (std::size_t d = 0; d < n && least; ++d) {
            if (le(a, d) && le(b, d) && !le(c, d)) least = false;
          }
          if (least) lub = c, lub_ok = true;
        }
      }
      if (!glb_ok || !lub_ok) {
        throw Error(ErrorKind::NotALattice, "pair " + pair_text(labels, a, b) + " has no unique " +
                                                (glb_ok ? "least upper bound" : "greatest lower bound"));
      }
      L.meet_[a * n + b] = static_cast<Element>(*glb);
      L.join_[a * n + b] = static_cast<Element>(*lub);
    }
  }

  if (ortho.size() != n) throw Error(ErrorKind::OrthoNotInvolution, "orthocomplement is not total");
  for (std::size_t a = 0; a < n; ++a) {
    if (ortho[a] >= n || ortho[ortho[a]] != a) {
      throw Error(ErrorKind::OrthoNotInvolution, "a'' != a at " + labels[a]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (le(a, b) && !le(ortho[b], ortho[a])) {
        throw Error(ErrorKind::OrthoNotOrderReversing,
                    "witness " + pair_text(labels, a, b) + ": a <= b but not b' <= a'");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (L.meet_[a * n + ortho[a]] != *bottom || L.join_[a * n + ortho[a]] != *top) {
      throw Error(ErrorKind::NotOrthocomplement, "a ^ a' != 0 or a v a' != 1 at " + labels[a]);
    }
  }

  L.name_ = std::move(name);
  L.labels_ = std::move(labels);
  L.leq_ = std::move(leq);
  L.ortho_ = std::move(ortho);
  L.bottom_ = static_cast<Element>(*bottom);
  L.top_ = static_cast<Element>(*top);
  return L;
}

inline std::size_t label_index(const std::vector<std::string>& labels, const std::string& label,
                               const std::string& where) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorKind::InvalidSpec, where + " references undeclared element '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace detail

/// Order = reflexive-transitive closure of the covers; meet and join are
/// searched from the order. Throws on every violated ortholattice law.
inline FiniteOrtholattice build_from_hasse(const HasseSpec& spec) {
  const auto& labels = spec.elements;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (labels[i] == labels[j]) throw Error(ErrorKind::InvalidSpec, "duplicate element '" + labels[i] + "'");
    }
  }

  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) leq[a * n + a] = 1;
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [lo, hi] : spec.covers) {
    const auto a = detail::label_index(labels, lo, "cover");
    const auto b = detail::label_index(labels, hi, "cover");
    if (a == b) throw Error(ErrorKind::InvalidSpec, "self-cover at '" + lo + "'");
    if (std::find(seen.begin(), seen.end(), std::pair{a, b}) != seen.end()) {
      throw Error(ErrorKind::InvalidSpec, "duplicate cover " + lo + " < " + hi);
    }
    seen.emplace_back(a, b);
    leq[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq[a * n + k]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (leq[k * n + b]) leq[a * n + b] = 1;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (leq[a * n + b] && leq[b * n + a]) {
        throw Error(ErrorKind::CycleInCovers, "covers form a cycle through " + detail::pair_text(labels, a, b));
      }
    }
  }

  constexpr auto unset = static_cast<Element>(0xFFFF);
  std::vector<Element> ortho(n, unset);
  for (const auto& [p, q] : spec.ortho) {
    const auto a = detail::label_index(labels, p, "ortho pair");
    const auto b = detail::label_index(labels, q, "ortho pair");
    if (a == b) throw Error(ErrorKind::OrthoNotInvolution, "element '" + p + "' paired with itself");
    if (ortho[a] != unset || ortho[b] != unset) {
      throw Error(ErrorKind::OrthoNotInvolution, "element in more than one ortho pair: " + p + " " + q);
    }
    ortho[a] = static_cast<Element>(b);
    ortho[b] = static_cast<Element>(a);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (ortho[a] == unset) throw Error(ErrorKind::OrthoNotInvolution, "element '" + labels[a] + "' has no orthocomplement");
  }
  return detail::assemble(spec.name, labels, std::move(leq), std::move(ortho));
}

inline std::string subset_label(const std::vector<std::string>& universe, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!(mask >> i & 1U)) continue;
    if (!first) out += ",";
    out += universe[i];
    first = false;
  }
  return out + "}";
}

/// Lattice of a complement-closed set family. The order is inclusion, but
/// meet and join are taken from that order and need not be intersection and
/// union.
inline FiniteOrtholattice from_subset_family(const SubsetFamilySpec& spec) {
  const auto& U = spec.universe;
  if (U.size() > 64) throw Error(ErrorKind::InvalidSpec, "universe larger than 64 atoms");
  for (std::size_t i = 0; i < U.size(); ++i) {
    for (std::size_t j = i + 1; j < U.size(); ++j) {
      if (U[i] == U[j]) throw Error(ErrorKind::InvalidSpec, "duplicate atom '" + U[i] + "'");
    }
  }
  const std::uint64_t full = U.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << U.size()) - 1;

  std::vector<std::uint64_t> masks;
  for (const auto& subset : spec.family) {
    std::uint64_t m = 0;
    for (const auto& atom : subset) m |= std::uint64_t{1} << detail::label_index(U, atom, "subset");
    if (std::find(masks.begin(), masks.end(), m) != masks.end()) {
      throw Error(ErrorKind::InvalidSpec, "duplicate subset " + subset_label(U, m));
    }
    masks.push_back(m);
  }
  const auto n = masks.size();
  std::vector<Element> ortho(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find(masks.begin(), masks.end(), full & ~masks[i]);
    if (it == masks.end()) {
      throw Error(ErrorKind::NotComplementClosed,
                  "complement of " + subset_label(U, masks[i]) + " (" + subset_label(U, full & ~masks[i]) + ") missing");
    }
    ortho[i] = static_cast<Element>(it - masks.begin());
  }
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(subset_label(U, masks[i]));
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = (masks[i] & ~masks[j]) == 0;
  }
  return detail::assemble(spec.name, std::move(labels), std::move(leq), std::move(ortho));
}

// Text format:
//   lattice <name>
//   elements <l1> <l2> ...
//   covers <a> <b> ; <c> <d> ; ...      (a covered by b)
//   ortho <a> <b> ; ...
// `#` starts a comment; covers/ortho may repeat and accumulate.

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::vector<std::pair<std::string, std::string>> parse_pairs(const std::vector<std::string>& toks,
                                                                    std::size_t lineno) {
  std::vector<std::pair<std::string, std::string>> out;
  std::vector<std::string> cur;
  auto flush = [&] {
    if (cur.size() != 2) {
      throw Error(ErrorKind::SyntaxError, "line " + std::to_string(lineno) + ": expected '<a> <b>' between ';'");
    }
    out.emplace_back(cur[0], cur[1]);
    cur.clear();
  };
  for (std::size_t i = 1; i < toks.size(); ++i) {
    if (toks[i] == ";") {
      flush();
    } else {
      cur.push_back(toks[i]);
    }
  }
  if (!cur.empty() || out.empty()) flush();
  return out;
}

inline std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(hash == std::string_view::npos ? line : line.substr(0, hash));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

inline HasseSpec parse_hasse_text(std::string_view text) {
  HasseSpec spec;
  bool have_name = false, have_elements = false;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = detail::strip_comment(raw);
    // ';' may be glued to labels
    std::string spaced;
    for (char ch : line) {
      if (ch == ';') {
        spaced += " ; ";
      } else {
        spaced += ch;
      }
    }
    auto toks = detail::split_ws(spaced);
    if (toks.empty()) continue;
    const auto& d = toks[0];
    const auto where = "line " + std::to_string(lineno) + ": ";
    if (d == "lattice") {
      if (toks.size() != 2 || have_name) throw Error(ErrorKind::SyntaxError, where + "expected a single 'lattice <name>'");
      spec.name = toks[1];
      have_name = true;
    } else if (d == "elements") {
      if (toks.size() < 2 || have_elements) throw Error(ErrorKind::SyntaxError, where + "expected a single 'elements' list");
      spec.elements.assign(toks.begin() + 1, toks.end());
      have_elements = true;
    } else if (d == "covers") {
      auto pairs = detail::parse_pairs(toks, lineno);
      spec.covers.insert(spec.covers.end(), pairs.begin(), pairs.end());
    } else if (d == "ortho") {
      auto pairs = detail::parse_pairs(toks, lineno);
      spec.ortho.insert(spec.ortho.end(), pairs.begin(), pairs.end());
    } else {
      throw Error(ErrorKind::SyntaxError, where + "unknown directive '" + d + "'");
    }
  }
  if (!have_elements) throw Error(ErrorKind::SyntaxError, "missing 'elements' directive");
  if (!have_name) spec.name = "unnamed";
  return spec;
}

inline HasseSpec load_hasse_file(const std::string& path) { return parse_hasse_text(detail::read_file(path)); }

/// Writes `L` back in the text format (covers recomputed from the order).
inline std::string to_hasse_text(const FiniteOrtholattice& L) {
  std::string out = "lattice " + L.name() + "\nelements";
  for (const auto& l : L.labels()) out += " " + l;
  out += "\ncovers";
  bool first = true;
  for (auto [a, b] : L.covers()) {
    out += (first ? " " : " ; ") + L.label(a) + " " + L.label(b);
    first = false;
  }
  out += "\northo";
  first = true;
  for (Element a = 0; a < L.size(); ++a) {
    if (L.ortho(a) < a) continue;
    out += (first ? " " : " ; ") + L.label(a) + " " + L.label(L.ortho(a));
    first = false;
  }
  return out + "\n";
}

/// Outcome of the exhaustive invariant suite run by `verify`.
struct InvariantReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
  }
};

/// Re-checks every table-level law of a constructed lattice: poset axioms,
/// glb/lub tables, commutativity and associativity, involution, order
/// reversal, De Morgan, bounds and the two order characterizations.
inline InvariantReport check_invariants(const FiniteOrtholattice& L) {
  const auto n = static_cast<Element>(L.size());
  InvariantReport r;
  auto all2 = [&](auto&& pred) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (!pred(a, b)) return false;
    return true;
  };
  auto all3 = [&](auto&& pred) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!pred(a, b, c)) return false;
    return true;
  };
  r.checks.emplace_back("reflexive", all2([&](Element a, Element) { return L.leq(a, a); }));
  r.checks.emplace_back("antisymmetric", all2([&](Element a, Element b) { return !(L.leq(a, b) && L.leq(b, a)) || a == b; }));
  r.checks.emplace_back("transitive", all3([&](Element a, Element b, Element c) {
                          return !(L.leq(a, b) && L.leq(b, c)) || L.leq(a, c);
                        }));
  r.checks.emplace_back("meet is glb", all3([&](Element a, Element b, Element c) {
                          const auto m = L.meet(a, b);
                          return L.leq(m, a) && L.leq(m, b) && (!(L.leq(c, a) && L.leq(c, b)) || L.leq(c, m));
                        }));
  r.checks.emplace_back("join is lub", all3([&](Element a, Element b, Element c) {
                          const auto j = L.join(a, b);
                          return L.leq(a, j) && L.leq(b, j) && (!(L.leq(a, c) && L.leq(b, c)) || L.leq(j, c));
                        }));
  r.checks.emplace_back("commutative", all2([&](Element a, Element b) {
                          return L.meet(a, b) == L.meet(b, a) && L.join(a, b) == L.join(b, a);
                        }));
  r.checks.emplace_back("associative", all3([&](Element a, Element b, Element c) {
                          return L.meet(L.meet(a, b), c) == L.meet(a, L.meet(b, c)) &&
                                 L.join(L.join(a, b), c) == L.join(a, L.join(b, c));
                        }));
  r.checks.emplace_back("involution", all2([&](Element a, Element) { return L.ortho(L.ortho(a)) == a; }));
  r.checks.emplace_back("order reversing", all2([&](Element a, Element b) {
                          return !L.leq(a, b) || L.leq(L.ortho(b), L.ortho(a));
                        }));
  r.checks.emplace_back("de morgan", all2([&](Element a, Element b) {
                          return L.meet(a, b) == L.ortho(L.join(L.ortho(a), L.ortho(b))) &&
                                 L.join(a, b) == L.ortho(L.meet(L.ortho(a), L.ortho(b)));
                        }));
  r.checks.emplace_back("bounds", all2([&](Element a, Element) {
                          return L.meet(a, L.ortho(a)) == L.bottom() && L.join(a, L.ortho(a)) == L.top();
                        }));
  r.checks.emplace_back("order characterizations agree", all2([&](Element a, Element b) {
                          return (L.meet(a, b) == a) == (L.join(a, b) == b) && (L.meet(a, b) == a) == L.leq(a, b);
                        }));
  return r;
}

}  // namespace olcheck
