#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "olcheck/classify.hpp"
#include "olcheck/logic.hpp"
#include "olcheck/tables.hpp"

namespace olcheck {

// JSON renderings with a fixed key order, so identical inputs give identical
// bytes.

using Json = nlohmann::ordered_json;

inline Json witness_json(const FiniteOrtholattice& L, const CheckResult& r) {
  Json w = Json::object();
  if (r.witness) {
    for (std::size_t i = 0; i < r.witness->size(); ++i) w[r.var_names.at(i)] = L.label((*r.witness)[i]);
  }
  return w;
}

inline Json values_json(const FiniteOrtholattice& L, const CheckResult& r) {
  Json v = Json::object();
  for (const auto& [side, e] : r.values) v[side] = L.label(e);
  return v;
}

/// {lattice, condition, reading, status, scanned, witness, values}
inline Json check_json(const FiniteOrtholattice& L, std::string_view condition, std::string_view reading,
                       const CheckResult& r) {
  Json j;
  j["lattice"] = L.name();
  j["condition"] = condition;
  j["reading"] = reading;
  j["status"] = r.passed ? "pass" : "fail";
  j["scanned"] = r.scanned;
  j["witness"] = witness_json(L, r);
  j["values"] = values_json(L, r);
  return j;
}

inline Json invariants_json(const FiniteOrtholattice& L, const InvariantReport& inv) {
  Json j;
  j["lattice"] = L.name();
  j["status"] = inv.ok() ? "ok" : "fail";
  j["size"] = L.size();
  j["bottom"] = L.label(L.bottom());
  j["top"] = L.label(L.top());
  j["covers"] = L.covers().size();
  Json checks = Json::object();
  for (const auto& [name, ok] : inv.checks) checks[name] = ok;
  j["checks"] = checks;
  return j;
}

inline Json profile_json(const FiniteOrtholattice& L, const VarietyProfile& p) {
  Json j;
  j["lattice"] = p.lattice;
  j["reading"] = to_string(p.reading);
  Json flags = Json::object();
  for (const auto& f : p.flags) flags[f.name] = f.value;
  j["flags"] = flags;
  Json witnesses = Json::object();
  for (const auto& f : p.flags) {
    if (!f.failure) continue;
    Json w;
    w["condition"] = f.failure->first;
    w["witness"] = witness_json(L, f.failure->second);
    w["values"] = values_json(L, f.failure->second);
    witnesses[f.name] = w;
  }
  j["witnesses"] = witnesses;
  return j;
}

inline Json soundness_json(const FiniteOrtholattice& L, const SoundnessReport& r) {
  Json j;
  j["system"] = to_string(r.system);
  j["lattice"] = r.lattice;
  j["status"] = r.passed() ? "pass" : "fail";
  Json axioms = Json::array();
  for (const auto& a : r.axioms) {
    Json row;
    row["axiom"] = a.name;
    row["instance"] = to_string(a.instance);
    row["status"] = a.result.passed ? "pass" : "fail";
    row["witness"] = witness_json(L, a.result);
    axioms.push_back(row);
  }
  j["axioms"] = axioms;
  Json rule;
  rule["status"] = r.rule.passed ? "pass" : "fail";
  rule["witness"] = witness_json(L, r.rule);
  j["rule"] = rule;
  return j;
}

inline Json table_json(const WeakOrthomodularityTable& t) {
  Json j;
  Json cells = Json::array();
  for (const auto& c : t.cells) {
    const auto L = builtin(c.lattice);
    Json row;
    row["condition"] = c.condition;
    row["lattice"] = c.lattice;
    row["reading"] = to_string(c.reading);
    row["checked"] = c.resolved;
    row["status"] = c.result.passed ? "pass" : "fail";
    row["stated"] = c.stated ? Json(*c.stated ? "pass" : "fail") : Json(nullptr);
    row["diverges"] = c.diverges();
    row["witness"] = witness_json(L, c.result);
    cells.push_back(row);
  }
  j["cells"] = cells;
  Json closure = Json::array();
  for (const auto& r : t.closure) {
    Json row;
    row["lattice"] = r.lattice;
    row["condition"] = r.condition;
    row["on_lattice"] = r.on_lattice ? "pass" : "fail";
    row["on_O6_subalgebra"] = r.on_subalgebra ? "pass" : "fail";
    row["holds"] = r.holds();
    closure.push_back(row);
  }
  j["closure"] = closure;
  j["divergences"] = t.divergences();
  j["violations"] = t.violations;
  j["status"] = t.ok() ? "ok" : "fail";
  return j;
}

inline Json error_json(const Error& e) {
  Json j;
  j["status"] = "error";
  j["kind"] = to_string(e.kind());
  j["message"] = e.detail();
  return j;
}

}  // namespace olcheck
