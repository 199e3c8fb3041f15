#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "olcheck/builtins.hpp"
#include "olcheck/checker.hpp"
#include "olcheck/conditions.hpp"
#include "olcheck/isomorphism.hpp"

namespace olcheck {

struct VarietyFlag {
  std::string name;
  bool value = false;
  /// First failing underlying check, for unstarred flags that are false.
  std::optional<std::pair<std::string, CheckResult>> failure;
};

/// Membership of one lattice in the weakly orthomodular and weakly
/// distributive classes. Flags are literal per-lattice values.
struct VarietyProfile {
  std::string lattice;
  Reading reading = Reading::Q;
  std::vector<VarietyFlag> flags;
  /// Every catalog check that fed the flags, by condition name.
  std::vector<std::pair<std::string, CheckResult>> checks;

  const VarietyFlag& flag(std::string_view name) const {
    for (const auto& f : flags) {
      if (f.name == name) return f;
    }
    throw Error(ErrorKind::UnknownCondition, "no variety flag '" + std::string(name) + "'");
  }
  bool operator[](std::string_view name) const { return flag(name).value; }

  const CheckResult& check(std::string_view condition) const {
    for (const auto& [name, r] : checks) {
      if (name == condition) return r;
    }
    throw Error(ErrorKind::UnknownCondition, "condition '" + std::string(condition) + "' was not evaluated");
  }
};

inline const std::vector<std::string>& variety_flag_names() {
  static const std::vector<std::string> names{"OL",  "WOML", "WOML1", "WOML2",  "OML",   "WDL",
                                              "DL",  "WOML*", "WOML1*", "WOML2*", "WDL*"};
  return names;
}

/// Evaluates the catalog on `L`. The WOML1 and WOML2 identities are taken
/// under `reading`; everything else is reading-independent.
///   WOML  = WOM_horn1           WOML1 = WOML and WOML1_id
///   WOML2 = WOML1 and WOML2_id  OML   = OM_eq
///   WDL   = COMM                DL    = DIST_eq
///   WOML2* = WOML2, not OM      WOML1* = WOML1, neither OM nor WOML2_id
///   WOML*  = WOML, none of OM, WOML2_id, WOML1_id
///   WDL*   = WDL, not DIST
inline VarietyProfile classify(const FiniteOrtholattice& L, Reading reading = Reading::Q, const CheckOptions& opts = {}) {
  VarietyProfile p{L.name(), reading, {}, {}};
  auto run = [&](const HornCondition& c) -> const CheckResult& {
    p.checks.emplace_back(c.name, check_horn(L, c, opts));
    return p.checks.back().second;
  };
  auto failure = [&](std::initializer_list<std::string_view> names) -> std::optional<std::pair<std::string, CheckResult>> {
    for (auto n : names) {
      const auto& r = p.check(n);
      if (!r.passed) return std::pair{std::string(n), r};
    }
    return std::nullopt;
  };

  bool ol = true;
  for (int i = 1; i <= 6; ++i) ol = run(builtin_condition("OL" + std::to_string(i))).passed && ol;
  const bool wom = run(builtin_condition("WOM_horn1")).passed;
  const auto woml1_cond = condition_for_reading("WOML1_id", reading);
  const auto woml2_cond = condition_for_reading("WOML2_id", reading);
  const bool woml1_id = run(woml1_cond).passed;
  const bool woml2_id = run(woml2_cond).passed;
  const bool om = run(builtin_condition("OM_eq")).passed;
  const bool om_horn = run(builtin_condition("OM_horn")).passed;
  const bool comm = run(builtin_condition("COMM")).passed;
  const bool dist = run(builtin_condition("DIST_eq")).passed;
  const bool dist_horn = run(builtin_condition("DIST_horn")).passed;
  if (om != om_horn || dist != dist_horn) {
    throw Error(ErrorKind::InternalInconsistency, "equational and Horn forms disagree on " + L.name());
  }

  std::vector<std::string_view> ol_names{"OL1", "OL2", "OL3", "OL4", "OL5", "OL6"};
  auto ol_failure = [&]() -> std::optional<std::pair<std::string, CheckResult>> {
    for (auto n : ol_names) {
      if (!p.check(n).passed) return std::pair{std::string(n), p.check(n)};
    }
    return std::nullopt;
  };

  const bool woml1 = wom && woml1_id;
  const bool woml2 = woml1 && woml2_id;
  p.flags = {
      {"OL", ol, ol_failure()},
      {"WOML", wom, failure({"WOM_horn1"})},
      {"WOML1", woml1, failure({"WOM_horn1", woml1_cond.name})},
      {"WOML2", woml2, failure({"WOM_horn1", woml1_cond.name, woml2_cond.name})},
      {"OML", om, failure({"OM_eq"})},
      {"WDL", comm, failure({"COMM"})},
      {"DL", dist, failure({"DIST_eq"})},
      {"WOML*", wom && !om && !woml2_id && !woml1_id, std::nullopt},
      {"WOML1*", woml1 && !om && !woml2_id, std::nullopt},
      {"WOML2*", woml2 && !om, std::nullopt},
      {"WDL*", comm && !dist, std::nullopt},
  };
  return p;
}

/// Outcome of the two-variable orthomodular equivalence oracle.
struct OmlVerdict {
  bool holds = true;
  /// Lattice that refuted t = s, with the failing valuation.
  std::string lattice;
  std::optional<CheckResult> counterexample;

  explicit operator bool() const noexcept { return holds; }
};

/// Decides whether t = s holds in every orthomodular lattice, for terms in at
/// most two variables. The free orthomodular lattice on two generators is
/// MO2 x 2^4 (Kalmbach, Orthomodular Lattices, ch. 1), so an equation in two
/// variables holds in all OMLs iff it holds in B2 and in MO2.
inline OmlVerdict oml_equiv2(const LatticeTerm& t, const LatticeTerm& s, std::span<const std::string> names = {}) {
  std::set<std::uint32_t> used;
  collect_vars(*t.node(), used);
  collect_vars(*s.node(), used);
  if (used.size() > 2) {
    throw Error(ErrorKind::TooManyVariables, "oml_equiv2 takes at most 2 variables, got " + std::to_string(used.size()));
  }
  std::vector<std::uint32_t> slot_of(used.empty() ? 0 : *used.rbegin() + std::size_t{1}, 0);
  std::vector<std::string> slot_names;
  for (auto v : used) {
    slot_of[v] = static_cast<std::uint32_t>(slot_names.size());
    slot_names.push_back(v < names.size() ? names[v] : "a" + std::to_string(v));
  }
  const LatticeTerm lt(detail::rename_vars(t.node(), slot_of));
  const LatticeTerm ls(detail::rename_vars(s.node(), slot_of));

  static const FiniteOrtholattice b2 = builtin("B2");
  static const FiniteOrtholattice mo2 = builtin("MO2");
  for (const auto* L : {&b2, &mo2}) {
    auto r = check_identity(*L, lt, ls, slot_names);
    if (!r.passed) return {false, L->name(), std::move(r)};
  }
  return {};
}

inline OmlVerdict oml_equiv2(const Equation& e, std::span<const std::string> names = {}) {
  return oml_equiv2(e.lhs, e.rhs, names);
}

/// OM_horn result next to the O6-subalgebra search.
struct HollandReport {
  std::string lattice;
  CheckResult orthomodularity;
  std::optional<O6Witness> o6;

  bool consistent() const { return orthomodularity.passed == !o6.has_value(); }
};

/// Checks that OM_horn passes exactly when no O6 subalgebra exists.
inline HollandReport cross_validate_oml(const FiniteOrtholattice& L, const CheckOptions& opts = {}) {
  HollandReport r{L.name(), check_horn(L, builtin_condition("OM_horn"), opts), find_o6_subalgebra(L)};
  if (!r.consistent()) {
    std::string msg = L.name() + ": OM_horn " + (r.orthomodularity.passed ? "passes" : "fails at " + witness_text(L, r.orthomodularity));
    msg += r.o6 ? " but an O6 subalgebra exists at " + L.label(r.o6->lower()) + " < " + L.label(r.o6->upper())
                : " but no O6 subalgebra exists";
    throw Error(ErrorKind::InternalInconsistency, msg);
  }
  return r;
}

}  // namespace olcheck
