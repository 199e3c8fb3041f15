#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <tuple>
#include <vector>

#include "olcheck/builtins.hpp"
#include "olcheck/lattice.hpp"

namespace olcheck {

namespace detail {

// (height above bottom, lower-cover count, upper-cover count)
using Signature = std::tuple<int, int, int>;

inline std::vector<Signature> signatures(const FiniteOrtholattice& L) {
  const auto n = L.size();
  std::vector<int> height(n, 0), down(n, 0), up(n, 0);
  const auto covers = L.covers();
  for (auto [a, b] : covers) {
    ++up[a];
    ++down[b];
  }
  // covers come in index order of the lower element, which is not a
  // topological order in general: relax until stable.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [a, b] : covers) {
      if (height[b] < height[a] + 1) {
        height[b] = height[a] + 1;
        changed = true;
      }
    }
  }
  std::vector<Signature> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {height[i], down[i], up[i]};
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteOrtholattice& a, const FiniteOrtholattice& b)
      : a_(a), b_(b), sa_(signatures(a)), sb_(signatures(b)), map_(a.size(), kUnset), used_(b.size(), false) {}

  std::optional<std::vector<Element>> run() {
    if (a_.size() != b_.size()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr Element kUnset = 0xFFFF;

  bool compatible(Element x, Element y) const {
    if (sa_[x] != sb_[y] || used_[y]) return false;
    for (Element k = 0; k < a_.size(); ++k) {
      if (map_[k] == kUnset) continue;
      if (a_.leq(x, k) != b_.leq(y, map_[k]) || a_.leq(k, x) != b_.leq(map_[k], y)) return false;
    }
    return true;
  }

  void assign(Element x, Element y) {
    map_[x] = y;
    used_[y] = true;
  }
  void unassign(Element x) {
    used_[map_[x]] = false;
    map_[x] = kUnset;
  }

  bool extend(Element next) {
    while (next < a_.size() && map_[next] != kUnset) ++next;
    if (next == a_.size()) return true;
    const Element xo = a_.ortho(next);
    for (Element y = 0; y < b_.size(); ++y) {
      if (!compatible(next, y)) continue;
      const Element yo = b_.ortho(y);
      assign(next, y);
      bool ok = true;
      bool paired = false;
      if (map_[xo] == kUnset) {
        ok = compatible(xo, yo);
        if (ok) {
          assign(xo, yo);
          paired = true;
        }
      } else {
        ok = map_[xo] == yo;
      }
      if (ok && extend(next + 1)) return true;
      if (paired) unassign(xo);
      unassign(next);
    }
    return false;
  }

  const FiniteOrtholattice& a_;
  const FiniteOrtholattice& b_;
  std::vector<Signature> sa_, sb_;
  std::vector<Element> map_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Order- and orthocomplement-preserving bijection from `a` onto `b`, given as
/// target index per source index. Returns the lexicographically first such
/// mapping, or nothing.
inline std::optional<std::vector<Element>> find_isomorphism(const FiniteOrtholattice& a, const FiniteOrtholattice& b) {
  return detail::IsoSearch(a, b).run();
}

/// Six elements of a lattice forming a subalgebra isomorphic to O6, listed in
/// the O6 builtin order: 0, a, a', b, b', 1 with a < b.
struct O6Witness {
  std::array<Element, 6> elements;

  Element lower() const { return elements[1]; }
  Element upper() const { return elements[3]; }
};

/// First O6 subalgebra in (a, b) index order, if any. An ortholattice is
/// orthomodular exactly when this returns nothing.
inline std::optional<O6Witness> find_o6_subalgebra(const FiniteOrtholattice& L) {
  static const FiniteOrtholattice o6 = builtin("O6");
  const auto n = static_cast<Element>(L.size());
  for (Element a = 0; a < n; ++a) {
    if (a == L.bottom() || a == L.top()) continue;
    for (Element b = 0; b < n; ++b) {
      if (b == a || b == L.bottom() || b == L.top() || !L.leq(a, b)) continue;
      const std::array<Element, 6> s{L.bottom(), a, L.ortho(a), b, L.ortho(b), L.top()};
      bool distinct = true;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) distinct = distinct && s[i] != s[j];
      if (!distinct) continue;
      auto member = [&](Element e) { return std::find(s.begin(), s.end(), e) != s.end(); };
      bool closed = true;
      for (Element p : s)
        for (Element q : s) closed = closed && member(L.meet(p, q)) && member(L.join(p, q));
      if (!closed) continue;
      const auto sub = L.subalgebra(s, L.name() + "|O6");
      if (find_isomorphism(sub, o6)) return O6Witness{s};
    }
  }
  return std::nullopt;
}

}  // namespace olcheck
