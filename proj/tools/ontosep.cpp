/*
 * Copyright 2026 The ontosep Authors
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

// ontosep: decide separability of labeled knowledge bases from the command line.
//
// Exit codes: 0 all requested tasks separable (or verification passed),
// 1 some task inseparable (or verification failed), 2 input or usage error,
// 3 an emitted separator failed re-verification, 4 resource limit hit.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ontosep/entailment.hpp"
#include "ontosep/separability.hpp"
#include "ontosep/syntax.hpp"

#ifdef ONTOSEP_HAVE_ORACLE
#include "ontosep/oracle.hpp"
#endif

namespace {

using namespace ontosep;

enum Exit { kOk = 0, kFailed = 1, kInputError = 2, kVerifyMismatch = 3, kResourceLimit = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LabeledKB load(const std::string& path) {
  try {
    return parse_labeled_kb(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

void print_text(const std::string& path, const SeparabilityReport& r) {
  std::cout << path << ": " << task_name(r.task) << ": " << (r.separable ? "separable" : "inseparable") << "\n";
  if (!r.kb_satisfiable) std::cout << "  knowledge base is unsatisfiable\n";
  if (r.separator) {
    std::cout << "  separator (" << (r.separator->kind == SeparatorKind::kUcq ? "ucq" : "concept")
              << "): " << r.separator->text << (r.separator->verified ? "  [verified]" : "") << "\n";
  }
  for (const auto& n : r.negatives) {
    std::cout << "  negative " << n.negative.str() << ": " << (n.separable ? "separated" : "not separated");
    if (!n.witness_type.empty()) std::cout << ", witness type " << n.witness_type;
    std::cout << "\n";
  }
  for (const auto& p : r.pairs) {
    std::cout << "  pair (" << p.positive.str() << ", " << p.negative.str() << "): merged "
              << (p.merged_unsatisfiable ? "unsatisfiable" : "satisfiable") << ", types "
              << (p.types_disjoint ? "disjoint" : "shared") << "\n";
  }
  std::cout << "  types " << r.stats.types << ", closure " << r.stats.closure << ", " << r.stats.time_ms << " ms\n";
}

struct CheckConfig {
  std::vector<std::string> inputs;
  std::string task = "all";
  std::string format = "text";
  bool verify = false;
  std::size_t max_closure = ReasonerLimits{}.max_closure;
  std::uint64_t max_nodes = ReasonerLimits{}.max_nodes;
};

int run_check(const CheckConfig& cfg) {
  std::vector<Task> tasks;
  if (cfg.task == "all") {
    tasks = {Task::kWeakProjective, Task::kWeakNonprojective, Task::kStrong};
  } else if (auto t = task_from_name(cfg.task)) {
    tasks = {*t};
  } else {
    std::cerr << "unknown task '" << cfg.task << "'\n";
    return kInputError;
  }
  SeparabilityOptions opts;
  opts.limits.max_closure = cfg.max_closure;
  opts.limits.max_nodes = cfg.max_nodes;
  opts.verify = cfg.verify;

  std::vector<std::pair<std::string, LabeledKB>> kbs;
  for (const auto& path : cfg.inputs) kbs.emplace_back(path, load(path));

  int code = kOk;
  auto reports = nlohmann::ordered_json::array();
  for (const auto& [path, lk] : kbs) {
    for (Task t : tasks) {
      SeparabilityReport r = run_task(t, lk, opts);
      if (!r.separable && code == kOk) code = kFailed;
      if (cfg.verify && r.separator && !r.separator->verified) code = kVerifyMismatch;
      if (cfg.format == "json") reports.push_back(nlohmann::ordered_json::parse(render_report(r)));
      else print_text(path, r);
    }
  }
  if (cfg.format == "json") std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return code;
}

struct VerifyConfig {
  std::string input;
  std::string formula;
  std::string mode = "weak";
};

int run_verify(const VerifyConfig& cfg) {
  LabeledKB lk = load(cfg.input);
  std::string text = cfg.formula;
  if (std::ifstream probe(cfg.formula); probe) text = read_file(cfg.formula);
  std::variant<Concept, UCQ> f;
  try {
    f = parse_formula(text);
  } catch (const ParseError& e) {
    throw Error(std::string("formula: ") + e.what());
  }
  const KB& k = lk.kb();
  bool strong = cfg.mode == "strong";
  bool ok = true;
  auto verdict = [&](Symbol c, bool positive) {
    bool entailed = false, refuted = false;
    if (auto* q = std::get_if<UCQ>(&f)) {
      entailed = ucq_entailed(k, *q, c);
    } else {
      Concept cc = std::get<Concept>(f);
      entailed = entails_concept(k, cc, c);
      if (strong) refuted = entails_concept(k, Concept::negation(cc), c);
    }
    bool pass = positive ? entailed : (strong ? refuted : !entailed);
    ok = ok && pass;
    std::cout << (positive ? "positive " : "negative ") << c.str() << ": " << (entailed ? "entailed" : "not entailed");
    if (strong && !positive) std::cout << (refuted ? ", negation entailed" : ", negation not entailed");
    std::cout << (pass ? "" : "  FAIL") << "\n";
  };
  if (strong && std::holds_alternative<UCQ>(f)) {
    std::cerr << "strong verification needs a concept\n";
    return kInputError;
  }
  for (Symbol a : lk.positives()) verdict(a, true);
  for (Symbol b : lk.negatives()) verdict(b, false);
  std::cout << (ok ? "separates" : "does not separate") << "\n";
  return ok ? kOk : kFailed;
}

#ifdef ONTOSEP_HAVE_ORACLE
int run_oracle(const std::string& input, std::size_t domain) {
  LabeledKB lk = load(input);
  oracle::ModelBudget budget;
  budget.max_domain_size = domain;
  oracle::ModelSearch m = oracle::find_model(lk.kb(), budget);
  std::cout << "brute-force model search up to " << domain << " elements: ";
  if (m.model) std::cout << "model with " << m.model->domain_size() << " elements\n";
  else std::cout << (m.conclusive ? "no model\n" : "budget exhausted\n");
  std::cout << "reasoner: " << (kb_satisfiable(lk.kb()) ? "satisfiable" : "unsatisfiable") << "\n";
  if (lk.kb().ontology.empty()) {
    bool sep = oracle::brute_weak_separable_empty_ontology(lk.kb().database, lk.positives(), lk.negatives());
    std::cout << "weak separability (empty ontology, brute force): " << (sep ? "separable" : "inseparable") << "\n";
  }
  return kOk;
}
#endif

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separability of labeled ALCI knowledge bases"};
  app.require_subcommand(1);

  CheckConfig check;
  auto* check_cmd = app.add_subcommand("check", "Decide separability and print reports");
  check_cmd->add_option("inputs", check.inputs, "Labeled KB files (.okb)")->required();
  check_cmd->add_option("--task", check.task, "weak-projective | weak-nonprojective | strong | all");
  check_cmd->add_option("--format", check.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_flag("--verify", check.verify, "Re-check every emitted separator");
  check_cmd->add_option("--max-closure", check.max_closure, "Cap on the closure size");
  check_cmd->add_option("--max-nodes", check.max_nodes, "Cap on type-search nodes");

  VerifyConfig verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check whether a formula separates a labeled KB");
  verify_cmd->add_option("input", verify.input, "Labeled KB file (.okb)")->required();
  verify_cmd->add_option("--formula", verify.formula, "Formula file, or the formula text itself")->required();
  verify_cmd->add_option("--mode", verify.mode, "weak | strong")->check(CLI::IsMember({"weak", "strong"}));

#ifdef ONTOSEP_HAVE_ORACLE
  std::string oracle_input;
  std::size_t oracle_domain = 3;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-check on small domains (debugging)");
  oracle_cmd->add_option("input", oracle_input, "Labeled KB file (.okb)")->required();
  oracle_cmd->add_option("--oracle-domain", oracle_domain, "Largest domain size to enumerate");
#endif

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (check_cmd->parsed()) return run_check(check);
    if (verify_cmd->parsed()) return run_verify(verify);
#ifdef ONTOSEP_HAVE_ORACLE
    if (oracle_cmd->parsed()) return run_oracle(oracle_input, oracle_domain);
#endif
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
