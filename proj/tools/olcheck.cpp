// Command-line front end for the olcheck library.
//
// Exit codes: 0 pass/ok, 1 a check failed, 2 input or usage error.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "olcheck/olcheck.hpp"
#include "olcheck/report.hpp"

namespace {

using namespace olcheck;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

struct Globals {
  bool json = false;
  unsigned jobs = 1;

  CheckOptions options() const { return {jobs, CheckOptions{}.budget}; }
};

FiniteOrtholattice load_lattice(const std::string& ref) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), ref) != names.end()) return builtin(ref);
  if (ref == "hexagon") return from_subset_family(hexagon_family());
  if (!std::filesystem::exists(ref)) {
    throw Error(ErrorKind::UnknownBuiltin, "'" + ref + "' is neither a builtin lattice nor a file");
  }
  return build_from_hasse(load_hasse_file(ref));
}

HornCondition load_condition(const std::string& ref, Reading reading) {
  if (has_builtin_condition(ref)) return condition_for_reading(ref, reading);
  if (!std::filesystem::exists(ref)) {
    throw Error(ErrorKind::UnknownCondition, "'" + ref + "' is neither a builtin condition nor a file");
  }
  auto c = load_condition_file(ref);
  return reading == Reading::Horn ? horn_reading(c) : c;
}

std::vector<Reading> parse_readings(const std::string& text) {
  if (text == "q") return {Reading::Q};
  if (text == "c") return {Reading::C};
  if (text == "horn") return {Reading::Horn};
  if (text == "all") return {Reading::Q, Reading::C, Reading::Horn};
  throw Error(ErrorKind::InvalidSpec, "reading must be q, c, horn or all");
}

void print_result(const FiniteOrtholattice& L, const std::string& what, const CheckResult& r) {
  std::cout << what << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.scanned << " valuations scanned)\n";
  if (r.passed) return;
  std::cout << "  witness: " << witness_text(L, r) << "\n";
  for (const auto& [side, e] : r.values) std::cout << "  " << side << " = " << L.label(e) << "\n";
}

int cmd_verify(const Globals& g, const std::string& ref) {
  const auto L = load_lattice(ref);
  const auto inv = check_invariants(L);
  if (g.json) {
    std::cout << invariants_json(L, inv).dump(2) << "\n";
  } else {
    std::cout << L.name() << ": " << L.size() << " elements, " << L.covers().size() << " covers, bottom "
              << L.label(L.bottom()) << ", top " << L.label(L.top()) << "\n";
    for (const auto& [name, ok] : inv.checks) std::cout << "  " << (ok ? "ok  " : "FAIL") << " " << name << "\n";
  }
  return inv.ok() ? kPass : kFail;
}

int cmd_check(const Globals& g, const std::string& lattice, const std::string& condition, const std::string& reading) {
  const auto L = load_lattice(lattice);
  bool all_pass = true;
  Json reports = Json::array();
  for (auto rd : parse_readings(reading)) {
    const auto c = load_condition(condition, rd);
    const auto r = check_horn(L, c, g.options());
    all_pass = all_pass && r.passed;
    if (g.json) {
      reports.push_back(check_json(L, c.name, to_string(rd), r));
    } else {
      std::cout << describe(c) << "\n";
      print_result(L, L.name() + " " + c.name + " [" + std::string(to_string(rd)) + "]", r);
    }
  }
  if (g.json) std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return all_pass ? kPass : kFail;
}

int cmd_classify(const Globals& g, const std::string& lattice, const std::string& reading) {
  const auto L = load_lattice(lattice);
  const auto readings = parse_readings(reading);
  Json reports = Json::array();
  for (auto rd : readings) {
    const auto p = classify(L, rd, g.options());
    if (g.json) {
      reports.push_back(profile_json(L, p));
      continue;
    }
    std::cout << L.name() << " [" << to_string(rd) << "]\n";
    for (const auto& f : p.flags) {
      std::cout << "  " << f.name << std::string(8 - std::min<std::size_t>(f.name.size(), 7), ' ') << (f.value ? "yes" : "no");
      if (f.failure) std::cout << (f.value ? "  " : "   ") << f.failure->first << " fails at " << witness_text(L, f.failure->second);
      std::cout << "\n";
    }
  }
  if (g.json) std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return kPass;
}

int cmd_consequence(const Globals& g, const std::string& lattice, const std::vector<std::string>& hyps,
                    const std::string& formula) {
  const auto L = load_lattice(lattice);
  std::vector<Wff> gamma;
  for (const auto& h : hyps) gamma.push_back(parse_wff(h));
  const auto a = parse_wff(formula);
  const auto r = check_consequence(L, gamma, a, g.options());
  if (g.json) {
    std::cout << check_json(L, to_string(a), gamma.empty() ? "validity" : "consequence", r).dump(2) << "\n";
  } else {
    std::string what = L.name() + " ";
    for (std::size_t i = 0; i < gamma.size(); ++i) what += (i ? ", " : "") + to_string(gamma[i]);
    what += (gamma.empty() ? "|= " : " |= ") + to_string(a);
    print_result(L, what, r);
  }
  return r.passed ? kPass : kFail;
}

int cmd_proof_verify(const Globals& g, const std::string& path) {
  const auto d = load_derivation_file(path);
  const auto v = verify_derivation(d);
  std::string gamma;
  for (std::size_t i = 0; i < v.hypotheses.size(); ++i) gamma += (i ? ", " : "") + to_string(v.hypotheses[i]);
  if (g.json) {
    Json j;
    j["system"] = to_string(v.system);
    j["status"] = "ok";
    j["hypotheses"] = Json::array();
    for (const auto& h : v.hypotheses) j["hypotheses"].push_back(to_string(h));
    j["conclusion"] = to_string(v.conclusion);
    j["lines"] = d.lines.size();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "ok (" << to_string(v.system) << ", " << d.lines.size() << " lines): " << gamma
              << (gamma.empty() ? "|- " : " |- ") << to_string(v.conclusion) << "\n";
  }
  return kPass;
}

int cmd_soundness(const Globals& g, const std::string& system, const std::vector<std::string>& lattices) {
  const auto s = parse_system(system);
  bool all_pass = true;
  Json reports = Json::array();
  for (const auto& ref : lattices) {
    const auto L = load_lattice(ref);
    const auto r = soundness_suite(s, L, g.options());
    all_pass = all_pass && r.passed();
    if (g.json) {
      reports.push_back(soundness_json(L, r));
      continue;
    }
    std::cout << to_string(s) << " on " << L.name() << ": " << (r.passed() ? "pass" : "FAIL") << "\n";
    for (const auto& a : r.axioms) {
      std::cout << "  " << (a.result.passed ? "ok  " : "FAIL") << " " << a.name << "  " << to_string(a.instance);
      if (!a.result.passed) std::cout << "  at " << witness_text(L, a.result);
      std::cout << "\n";
    }
    std::cout << "  " << (r.rule.passed ? "ok  " : "FAIL") << " R1 (" << (s == System::CL ? "->c" : "->3") << ")";
    if (!r.rule.passed) std::cout << "  at " << witness_text(L, r.rule);
    std::cout << "\n";
  }
  if (g.json) std::cout << reports.dump(2) << "\n";
  return all_pass ? kPass : kFail;
}

int cmd_iso(const Globals& g, const std::string& a_ref, const std::string& b_ref) {
  const auto a = load_lattice(a_ref);
  const auto b = load_lattice(b_ref);
  const auto iso = find_isomorphism(a, b);
  if (g.json) {
    Json j;
    j["from"] = a.name();
    j["to"] = b.name();
    j["status"] = iso ? "isomorphic" : "not isomorphic";
    Json map = Json::object();
    if (iso) {
      for (Element e = 0; e < a.size(); ++e) map[a.label(e)] = b.label((*iso)[e]);
    }
    j["mapping"] = map;
    std::cout << j.dump(2) << "\n";
  } else if (iso) {
    std::cout << a.name() << " ~ " << b.name() << "\n";
    for (Element e = 0; e < a.size(); ++e) std::cout << "  " << a.label(e) << " -> " << b.label((*iso)[e]) << "\n";
  } else {
    std::cout << a.name() << " and " << b.name() << " are not isomorphic\n";
  }
  return iso ? kPass : kFail;
}

int cmd_paper_tables(const Globals& g) {
  const auto t = weak_orthomodularity_table(g.options());
  if (g.json) {
    std::cout << table_json(t).dump(2) << "\n";
    return t.ok() ? kPass : kFail;
  }
  std::cout << "Weak orthomodularity conditions on O6, O7, O8 (computed / stated)\n\n";
  std::cout << "condition     reading";
  for (const auto& l : t.lattices) std::cout << "  " << l << std::string(14 - std::min<std::size_t>(l.size(), 13), ' ');
  std::cout << "\n";
  for (const auto& name : t.conditions) {
    for (auto rd : t.readings) {
      std::string line = name + std::string(14 - std::min<std::size_t>(name.size(), 13), ' ');
      line += std::string(to_string(rd)) + std::string(9 - to_string(rd).size(), ' ');
      for (const auto& lat : t.lattices) {
        const auto& c = t.cell(name, lat, rd);
        std::string cell = c.result.passed ? "pass" : "fail";
        cell += " / " + std::string(c.stated ? (*c.stated ? "pass" : "fail") : "-   ");
        cell += c.diverges() ? " !" : "  ";
        line += cell + std::string(16 - std::min<std::size_t>(cell.size(), 15), ' ');
        while (line.back() == ' ' && &lat == &t.lattices.back()) line.pop_back();
      }
      std::cout << line << "\n";
    }
  }
  std::cout << "\n! marks a divergence between computed and stated outcome (" << t.divergences() << " cells)\n";
  std::size_t closure_fail = 0;
  for (const auto& r : t.closure) closure_fail += r.holds() ? 0 : 1;
  std::cout << "subalgebra closure: " << t.closure.size() - closure_fail << "/" << t.closure.size()
            << " rows consistent (pass on lattice implies pass on its O6 subalgebra)\n";
  for (const auto& r : t.closure) {
    if (!r.holds()) std::cout << "  VIOLATED " << r.lattice << " " << r.condition << "\n";
  }
  if (t.violations.empty()) {
    std::cout << "verified rows: OM failures with first witnesses, WOM_horn1 and OM_unit passes all hold\n";
  } else {
    for (const auto& v : t.violations) std::cout << "VIOLATION " << v << "\n";
  }
  return t.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ortholattice model checker and derivation verifier"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit a JSON report");
  app.add_option("--jobs", g.jobs, "Parallel workers per valuation scan")->check(CLI::PositiveNumber);

  std::string lattice, lattice2, condition, reading = "q", formula, path, system;
  std::vector<std::string> hyps, lattices;

  auto* verify = app.add_subcommand("verify", "Build a lattice and re-check every ortholattice law");
  verify->add_option("lattice,--lattice", lattice, "Builtin name, 'hexagon' or Hasse file")->required();

  auto* check = app.add_subcommand("check", "Check a condition on a lattice");
  check->add_option("lattice,--lattice", lattice, "Builtin name, 'hexagon' or Hasse file")->required();
  check->add_option("condition,--condition", condition, "Builtin condition or condition file")->required();
  check->add_option("--reading", reading, "q, c, horn or all")->capture_default_str();

  auto* cls = app.add_subcommand("classify", "Variety flags of a lattice");
  cls->add_option("lattice,--lattice", lattice, "Builtin name, 'hexagon' or Hasse file")->required();
  cls->add_option("--reading", reading, "q, c, horn or all")->capture_default_str();

  auto* valid = app.add_subcommand("valid", "Check validity of a wff");
  valid->add_option("lattice,--lattice", lattice, "Builtin name, 'hexagon' or Hasse file")->required();
  valid->add_option("wff", formula, "Formula over p0, p1, ...")->required();

  auto* cons = app.add_subcommand("consequence", "Check that hypotheses force a wff to 1");
  cons->add_option("lattice,--lattice", lattice, "Builtin name, 'hexagon' or Hasse file")->required();
  cons->add_option("wff", formula, "Conclusion")->required();
  cons->add_option("--hyp", hyps, "Hypothesis (repeatable)");

  auto* proof = app.add_subcommand("proof", "Derivation tools");
  proof->require_subcommand(1);
  auto* proof_verify = proof->add_subcommand("verify", "Verify a derivation file line by line");
  proof_verify->add_option("path", path, "Derivation file")->required()->check(CLI::ExistingFile);

  auto* sound = app.add_subcommand("soundness", "Axiom validity and rule soundness on lattices");
  sound->add_option("system", system, "CL or QL")->required();
  sound->add_option("lattices,--lattice", lattices, "Lattices")->required();

  auto* iso = app.add_subcommand("iso", "Find an ortholattice isomorphism");
  iso->add_option("first", lattice, "Source lattice")->required();
  iso->add_option("second", lattice2, "Target lattice")->required();

  auto* tables = app.add_subcommand("paper-tables", "Weak orthomodularity table with divergence report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*verify) return cmd_verify(g, lattice);
    if (*check) return cmd_check(g, lattice, condition, reading);
    if (*cls) return cmd_classify(g, lattice, reading);
    if (*valid) return cmd_consequence(g, lattice, {}, formula);
    if (*cons) return cmd_consequence(g, lattice, hyps, formula);
    if (*proof_verify) return cmd_proof_verify(g, path);
    if (*sound) return cmd_soundness(g, system, lattices);
    if (*iso) return cmd_iso(g, lattice, lattice2);
    if (*tables) return cmd_paper_tables(g);
  } catch (const Error& e) {
    if (g.json) {
      std::cout << error_json(e).dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kError;
  }
  return kError;
}
