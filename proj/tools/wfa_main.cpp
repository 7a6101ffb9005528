/*
 *   Copyright 2026 the wfakit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wfa/decide.hpp"
#include "wfa/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Exit codes: 0 pass/EQUIVALENT, 1 fail/INEQUIVALENT, 2 inconclusive or
// budget exhausted, 64 usage error, 65 parse error, 70 internal error.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitInternal = 70;

bool g_json = false;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string display_word(const wfa::Word& w) { return w.empty() ? "eps" : w; }

json witness_json(const wfa::InequivalenceWitness& w, const wfa::Semiring& s) {
  return json{{"word", w.word},
              {"lhs", s.format(w.lhs)},
              {"rhs", s.format(w.rhs)}};
}

json matrix_json(const wfa::Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m.semiring().format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_witness_file(const wfa::InequivalenceWitness& w,
                        const wfa::Semiring& s, const fs::path& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << "word: " << display_word(w.word) << "\n"
      << "lhs: " << s.format(w.lhs) << "\n"
      << "rhs: " << s.format(w.rhs) << "\n";
}

struct EvidencePaths {
  fs::path a, joint, b, x, y, chain;
};

/// Writes the self-contained A ← C → B evidence bundle next to `prefix`:
/// copies of the two inputs, the joint automaton, both certificates, and the
/// chain, with all internal references relative to the output directory.
EvidencePaths write_joint_evidence(const wfa::ChainCertificate& chain,
                                   const std::string& prefix) {
  EvidencePaths paths{prefix + ".A.wfa", prefix + ".C.wfa", prefix + ".B.wfa",
                      prefix + ".X.sim", prefix + ".Y.sim", prefix + ".chain"};
  const fs::path out_dir = fs::absolute(paths.chain).parent_path();
  wfa::save_automaton(chain.automata.at(0), paths.a);
  wfa::save_automaton(chain.automata.at(1), paths.joint);
  wfa::save_automaton(chain.automata.at(2), paths.b);

  const std::string a_ref = wfa::relative_ref(fs::absolute(paths.a), out_dir);
  const std::string b_ref = wfa::relative_ref(fs::absolute(paths.b), out_dir);
  const std::string c_ref =
      wfa::relative_ref(fs::absolute(paths.joint), out_dir);
  wfa::save_certificate(chain.links.at(0).x, paths.x, c_ref, a_ref);
  wfa::save_certificate(chain.links.at(1).x, paths.y, c_ref, b_ref);
  wfa::save_chain(chain, paths.chain, {a_ref, c_ref, b_ref});
  return paths;
}

int run_eval(const fs::path& a_path, const std::string& word) {
  const wfa::Automaton a = wfa::load_automaton(a_path);
  const wfa::Elem c = wfa::behavior_coeff(a, word == "eps" ? "" : word);
  if (g_json)
    emit(json{{"coefficient", a.semiring().format(c)}});
  else
    std::cout << a.semiring().format(c) << "\n";
  return kExitPass;
}

int run_enum(const fs::path& a_path, std::size_t max_len) {
  const wfa::Automaton a = wfa::load_automaton(a_path);
  const auto coeffs = wfa::enumerate_coeffs(a, max_len);
  if (g_json) {
    json items = json::array();
    for (const auto& [w, c] : coeffs)
      items.push_back(json{{"word", w}, {"value", a.semiring().format(c)}});
    emit(json{{"coefficients", std::move(items)}});
  } else {
    for (const auto& [w, c] : coeffs)
      std::cout << display_word(w) << " " << a.semiring().format(c) << "\n";
  }
  return kExitPass;
}

int run_check_sim(const fs::path& a_path, const fs::path& b_path,
                  const fs::path& cert_path) {
  const wfa::Automaton a = wfa::load_automaton(a_path);
  const wfa::Automaton b = wfa::load_automaton(b_path);
  const wfa::Matrix x = wfa::load_certificate_matrix(cert_path, a.semiring(),
                                                     a.dim(), b.dim());
  const wfa::SimReport r = wfa::check_simulation(a, b, x);
  if (g_json) {
    json out{{"ok", r.ok}};
    if (!r.ok) out["violation"] = r.violation->describe(a.semiring());
    emit(out);
  } else if (r.ok) {
    std::cout << "pass\n";
  } else {
    std::cout << "fail: " << r.violation->describe(a.semiring()) << "\n";
  }
  return r.ok ? kExitPass : kExitFail;
}

int run_verify_chain(const fs::path& chain_path, const fs::path& a_path,
                     const fs::path& b_path) {
  const wfa::ChainCertificate chain = wfa::load_chain(chain_path);
  const wfa::Automaton a = wfa::load_automaton(a_path);
  const wfa::Automaton b = wfa::load_automaton(b_path);
  const wfa::ChainReport r = wfa::verify_chain(chain, a, b);
  if (g_json) {
    emit(json{{"ok", r.ok}, {"message", r.message}});
  } else {
    std::cout << (r.ok ? "pass: " : "fail: ") << r.message << "\n";
  }
  return r.ok ? kExitPass : kExitFail;
}

json files_json(const EvidencePaths& paths) {
  return json{{"a", paths.a.string()},     {"joint", paths.joint.string()},
              {"b", paths.b.string()},     {"x", paths.x.string()},
              {"y", paths.y.string()},     {"chain", paths.chain.string()}};
}

int report_joint_result(const wfa::JointResult& j, const wfa::Automaton& a,
                        const wfa::Automaton& b, const std::string& prefix) {
  const wfa::ChainCertificate chain = wfa::emit_chain(j, a, b);
  const EvidencePaths paths = write_joint_evidence(chain, prefix);
  if (g_json) {
    emit(json{{"outcome", "joint"},
              {"mode", wfa::to_string(j.mode)},
              {"dimension", j.joint.dim()},
              {"closure_depth", j.closure_depth},
              {"files", files_json(paths)}});
  } else {
    std::cout << "mode: " << wfa::to_string(j.mode) << "\n"
              << "dimension: " << j.joint.dim() << "\n"
              << "closure-depth: " << j.closure_depth << "\n"
              << "joint: " << paths.joint.string() << "\n"
              << "x: " << paths.x.string() << "\n"
              << "y: " << paths.y.string() << "\n"
              << "chain: " << paths.chain.string() << "\n";
  }
  return kExitPass;
}

int report_witness(const wfa::InequivalenceWitness& w, const wfa::Semiring& s,
                   const std::string& prefix) {
  write_witness_file(w, s, prefix + ".witness");
  if (g_json) {
    emit(json{{"outcome", "witness"}, {"witness", witness_json(w, s)}});
  } else {
    std::cout << "inequivalent: word '" << display_word(w.word) << "' with "
              << s.format(w.lhs) << " vs " << s.format(w.rhs) << "\n";
  }
  return kExitFail;
}

int run_joint(const fs::path& a_path, const fs::path& b_path,
              const std::string& prefix, std::size_t cap) {
  const wfa::Automaton a = wfa::load_automaton(a_path);
  const wfa::Automaton b = wfa::load_automaton(b_path);
  const wfa::Semiring& s = a.semiring();

  wfa::JointIntegerOutcome outcome = [&]() -> wfa::JointIntegerOutcome {
    if (s.is_finite()) {
      auto o = wfa::joint_finite(a, b);
      if (auto* j = std::get_if<wfa::JointResult>(&o)) return std::move(*j);
      return std::get<wfa::InequivalenceWitness>(std::move(o));
    }
    if (s.is_field()) {
      auto o = wfa::joint_field(a, b);
      if (auto* j = std::get_if<wfa::JointResult>(&o)) return std::move(*j);
      return std::get<wfa::InequivalenceWitness>(std::move(o));
    }
    if (s.kind() == wfa::Semiring::Kind::integers)
      return wfa::joint_integers(a, b, cap);
    throw wfa::UnsupportedSemiringError(
        "no joint construction over '" + s.name() +
        "' (supported: finite semirings, fields, int)");
  }();

  if (auto* j = std::get_if<wfa::JointResult>(&outcome))
    return report_joint_result(*j, a, b, prefix);
  if (auto* w = std::get_if<wfa::InequivalenceWitness>(&outcome))
    return report_witness(*w, s, prefix);
  const auto& cap_report = std::get<wfa::CapExhausted>(outcome);
  if (g_json) {
    emit(json{{"outcome", "cap-exhausted"},
              {"cap", cap_report.cap},
              {"generators", cap_report.generators}});
  } else {
    std::cout << "inconclusive: integer closure did not stabilize within cap "
              << cap_report.cap << "\n";
  }
  return kExitInconclusive;
}

int run_decide(const fs::path& a_path, const fs::path& b_path,
               const wfa::Budget& budget, const std::string& prefix) {
  const wfa::Automaton a = wfa::load_automaton(a_path);
  const wfa::Automaton b = wfa::load_automaton(b_path);
  const wfa::Semiring& s = a.semiring();
  const wfa::Verdict v = wfa::decide_equiv(a, b, budget);

  switch (v.kind) {
    case wfa::Verdict::Kind::equivalent: {
      json files;
      std::string chain_note;
      if (v.chain->automata.size() == 3 && v.chain->links.size() == 2) {
        const EvidencePaths paths = write_joint_evidence(*v.chain, prefix);
        files = files_json(paths);
        chain_note = paths.chain.string();
      }
      if (g_json) {
        emit(json{{"verdict", "EQUIVALENT"},
                  {"detail", v.detail},
                  {"files", files}});
      } else {
        std::cout << "verdict: EQUIVALENT\n"
                  << "detail: " << v.detail << "\n";
        if (!chain_note.empty()) std::cout << "chain: " << chain_note << "\n";
      }
      return kExitPass;
    }
    case wfa::Verdict::Kind::inequivalent: {
      write_witness_file(*v.witness, s, prefix + ".witness");
      if (g_json) {
        emit(json{{"verdict", "INEQUIVALENT"},
                  {"witness", witness_json(*v.witness, s)}});
      } else {
        std::cout << "verdict: INEQUIVALENT\n"
                  << "witness: word '" << display_word(v.witness->word)
                  << "' with " << s.format(v.witness->lhs) << " vs "
                  << s.format(v.witness->rhs) << "\n";
      }
      return kExitFail;
    }
    case wfa::Verdict::Kind::inconclusive:
      break;
  }
  if (g_json) {
    emit(json{{"verdict", "INCONCLUSIVE"}, {"detail", v.detail}});
  } else {
    std::cout << "verdict: INCONCLUSIVE\n" << "detail: " << v.detail << "\n";
  }
  return kExitInconclusive;
}

int run_probe(const fs::path& a_path, const fs::path& b_path,
              const wfa::Budget& budget) {
  const wfa::Automaton a = wfa::load_automaton(a_path);
  const wfa::Automaton b = wfa::load_automaton(b_path);
  const wfa::TropicalProbeReport r = wfa::tropical_probe(a, b, budget);
  const wfa::Semiring& s = a.semiring();
  if (g_json) {
    json out{{"word_bound", r.word_bound}, {"entry_bound", r.entry_bound}};
    out["witness"] = r.witness ? witness_json(*r.witness, s) : json(nullptr);
    out["forward"] =
        r.forward_sim ? matrix_json(*r.forward_sim) : json(nullptr);
    out["backward"] =
        r.backward_sim ? matrix_json(*r.backward_sim) : json(nullptr);
    emit(out);
  } else {
    std::cout << r.summary(s);
  }
  if (r.witness) return kExitFail;
  if (r.forward_sim || r.backward_sim) return kExitPass;
  return kExitInconclusive;
}

int run_validate(const fs::path& table_path) {
  const auto data = wfa::load_table_semiring(table_path);
  const wfa::TableValidation v = wfa::validate_table_semiring(*data);
  if (g_json) {
    json violations = json::array();
    for (const auto& viol : v.violations) {
      json w = json::array();
      for (std::uint32_t i : viol.witness) w.push_back(data->label(i));
      violations.push_back(
          json{{"witness", std::move(w)}, {"detail", viol.describe(*data)}});
    }
    emit(json{{"ok", v.ok}, {"violations", std::move(violations)}});
  } else if (v.ok) {
    std::cout << "pass: all semiring axioms hold (" << data->size()
              << " elements, exhaustive check)\n";
  } else {
    std::cout << "fail: " << v.violations.size() << " violation(s)\n";
    for (const auto& viol : v.violations)
      std::cout << "  " << viol.describe(*data) << "\n";
  }
  return v.ok ? kExitPass : kExitFail;
}

void add_budget_options(CLI::App* cmd, wfa::Budget& budget) {
  cmd->add_option("--max-word-len", budget.max_word_len,
                  "longest word tried by the inequivalence search")
      ->capture_default_str();
  cmd->add_option("--max-chain-len", budget.max_chain_len,
                  "longest chain tried by the finite chain search")
      ->capture_default_str();
  cmd->add_option("--max-intermediate-dim", budget.max_intermediate_dim,
                  "dimension cap for intermediate chain automata (0 = m+n)")
      ->capture_default_str();
  cmd->add_option("--max-steps", budget.max_steps,
                  "candidate cap for chain search / entry bound of the "
                  "tropical probe")
      ->capture_default_str();
  cmd->add_option("--integer-cap", budget.integer_cap,
                  "closure depth cap of the integer joint construction")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted automata over pluggable semirings: behaviors, "
               "simulation certificates, joint construction, equivalence"};
  app.set_config("--config", "", "read budget flags from an INI file");
  app.add_flag("--json", g_json, "machine-readable JSON output");
  bool explain = false;
  app.add_flag("--explain-budget", explain, "print budget defaults and exit");
  app.require_subcommand(0, 1);

  fs::path arg_a, arg_b, arg_cert, arg_chain, arg_table;
  std::string arg_word, arg_prefix = "joint";
  std::size_t arg_max_len = 0;
  wfa::Budget decide_budget;
  wfa::Budget probe_budget;
  probe_budget.max_steps = 4;  // entry bound suited to exhaustive search
  std::size_t joint_cap = wfa::Budget{}.integer_cap;

  int rc = kExitPass;

  auto* eval = app.add_subcommand("eval", "print one behavior coefficient");
  eval->add_option("automaton", arg_a, "automaton file")->required();
  eval->add_option("word", arg_word,
                   "word over the alphabet ('' or 'eps' for the empty word)")
      ->required();
  eval->callback([&] { rc = run_eval(arg_a, arg_word); });

  auto* enum_cmd = app.add_subcommand(
      "enum", "print coefficients of all words up to a length, length-lex");
  enum_cmd->add_option("automaton", arg_a, "automaton file")->required();
  enum_cmd->add_option("max-len", arg_max_len, "maximum word length")
      ->required();
  enum_cmd->callback([&] { rc = run_enum(arg_a, arg_max_len); });

  auto* check = app.add_subcommand(
      "check-sim", "verify a simulation certificate between two automata");
  check->add_option("A", arg_a, "source automaton")->required();
  check->add_option("B", arg_b, "target automaton")->required();
  check->add_option("cert", arg_cert, "certificate file")->required();
  check->callback([&] { rc = run_check_sim(arg_a, arg_b, arg_cert); });

  auto* verify = app.add_subcommand(
      "verify-chain", "verify a chain of simulations connecting two automata");
  verify->add_option("chain", arg_chain, "chain file")->required();
  verify->add_option("A", arg_a, "left endpoint automaton")->required();
  verify->add_option("B", arg_b, "right endpoint automaton")->required();
  verify->callback([&] { rc = run_verify_chain(arg_chain, arg_a, arg_b); });

  auto* joint = app.add_subcommand(
      "joint",
      "construct the joint automaton with simulations onto both inputs");
  joint->add_option("A", arg_a, "first automaton")->required();
  joint->add_option("B", arg_b, "second automaton")->required();
  joint->add_option("--out", arg_prefix, "output file prefix")
      ->capture_default_str();
  joint->add_option("--cap", joint_cap, "integer-mode closure depth cap")
      ->capture_default_str();
  joint->callback(
      [&] { rc = run_joint(arg_a, arg_b, arg_prefix, joint_cap); });

  auto* decide = app.add_subcommand(
      "decide", "decide equivalence and emit verifiable evidence");
  decide->add_option("A", arg_a, "first automaton")->required();
  decide->add_option("B", arg_b, "second automaton")->required();
  std::string decide_prefix = "evidence";
  decide->add_option("--out", decide_prefix, "output file prefix")
      ->capture_default_str();
  add_budget_options(decide, decide_budget);
  decide->callback(
      [&] { rc = run_decide(arg_a, arg_b, decide_budget, decide_prefix); });

  auto* probe = app.add_subcommand(
      "probe-tropical",
      "inequivalence search plus bounded exhaustive simulation search over "
      "the tropical semiring");
  probe->add_option("A", arg_a, "first automaton")->required();
  probe->add_option("B", arg_b, "second automaton")->required();
  add_budget_options(probe, probe_budget);
  probe->callback([&] { rc = run_probe(arg_a, arg_b, probe_budget); });

  auto* validate = app.add_subcommand(
      "validate-semiring", "check every semiring axiom of a table file");
  validate->add_option("table", arg_table, "semiring table file")->required();
  validate->callback([&] { rc = run_validate(arg_table); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const wfa::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    // Mismatched inputs, unsupported semirings, malformed tables.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wfa::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  if (explain) {
    std::cout << wfa::explain_budget();
    return kExitPass;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return kExitUsage;
  }
  return rc;
}
