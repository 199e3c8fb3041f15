#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "olcheck/lattice.hpp"

namespace olcheck {

namespace detail {

inline HasseSpec hasse(std::string name, std::string_view elements, std::string_view covers, std::string_view ortho) {
  HasseSpec spec;
  spec.name = std::move(name);
  spec.elements = split_ws(elements);
  auto pairs = [](std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& tok : split_ws(text)) {
      const auto lt = tok.find('<');
      out.emplace_back(tok.substr(0, lt), tok.substr(lt + 1));
    }
    return out;
  };
  spec.covers = pairs(covers);
  spec.ortho = pairs(ortho);
  return spec;
}

}  // namespace detail

// Cover lists of O7 and O8 are read off the drawn diagrams: a line passing
// through an intermediate vertex is a chain of two covers. The element order
// is 0, then each complement pair in order of first appearance in the
// figure's label list, then 1. Witness expectations depend on this order.

/// Hasse description of a named diagram lattice (O6, O7, O8, MO2).
inline HasseSpec builtin_hasse_spec(std::string_view name) {
  if (name == "O6") {
    return detail::hasse("O6", "0 x x' y y' 1",
                         "0<x 0<y' x<y y'<x' y<1 x'<1",
                         "x<x' y<y' 0<1");
  }
  if (name == "O7") {
    return detail::hasse("O7", "0 x x' w w' z z' y y' 1",
                         "0<x 0<w 0<z' x<y y<z y<w' w<z w<y' z'<y' z'<w' y'<x' z<1 w'<1 x'<1",
                         "x<x' y<y' z<z' w<w' 0<1");
  }
  if (name == "O8") {
    return detail::hasse("O8", "0 w w' z z' y y' x x' t t' s s' r r' v v' u u' 1",
                         "0<w 0<v' 0<x' w<z w<r v'<z v'<u' x'<y' x'<s' z<y z<t u'<t u'<r' s'<t' s'<r' "
                         "y'<z' t<s r<s r<u t'<z' t'<u r'<w' y<x s<x u<v z'<w' z'<v x<1 v<1 w'<1",
                         "x<x' y<y' z<z' w<w' u<u' v<v' r<r' s<s' t<t' 0<1");
  }
  if (name == "MO2") {
    return detail::hasse("MO2", "0 a a' b b' 1",
                         "0<a 0<a' 0<b 0<b' a<1 a'<1 b<1 b'<1",
                         "a<a' b<b' 0<1");
  }
  throw Error(ErrorKind::UnknownBuiltin, "no Hasse description for '" + std::string(name) + "'");
}

/// Boolean algebra 2^atoms. Elements in bitmask order, labelled "0", "1" or
/// by the concatenated atom letters a, b, c, d.
inline FiniteOrtholattice boolean_lattice(unsigned atoms) {
  if (atoms > 6) throw Error(ErrorKind::InvalidSpec, "Boolean builtins support at most 6 atoms");
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Element> ortho(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::string label;
    if (m == 0) {
      label = "0";
    } else if (m == n - 1) {
      label = "1";
    } else {
      for (unsigned i = 0; i < atoms; ++i)
        if (m >> i & 1U) label += static_cast<char>('a' + i);
    }
    labels.push_back(label);
    ortho[m] = static_cast<Element>((n - 1) & ~m);
    for (std::size_t k = 0; k < n; ++k) leq[m * n + k] = (m & ~k) == 0;
  }
  return detail::assemble("B" + std::to_string(n), std::move(labels), std::move(leq), std::move(ortho));
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"O6", "O7", "O8", "B2", "B4", "B8", "B16", "MO2"};
  return names;
}

inline FiniteOrtholattice builtin(std::string_view name) {
  if (name == "B2") return boolean_lattice(1);
  if (name == "B4") return boolean_lattice(2);
  if (name == "B8") return boolean_lattice(3);
  if (name == "B16") return boolean_lattice(4);
  if (name == "O6" || name == "O7" || name == "O8" || name == "MO2") return build_from_hasse(builtin_hasse_spec(name));
  throw Error(ErrorKind::UnknownBuiltin, "unknown builtin lattice '" + std::string(name) + "'");
}

/// The hexagon set family over {-1, 0, 1}.
inline SubsetFamilySpec hexagon_family() {
  return {"hexagon", {"-1", "0", "1"}, {{}, {"-1"}, {"-1", "0"}, {"1"}, {"0", "1"}, {"-1", "0", "1"}}};
}

}  // namespace olcheck
