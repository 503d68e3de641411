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

#include "ontosep/separability.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"
#include "ontosep/entailment.hpp"
#include "ontosep/graph_ops.hpp"
#include "ontosep/syntax.hpp"

namespace ontosep {

using Json = nlohmann::ordered_json;

std::string_view task_name(Task t) {
  switch (t) {
    case Task::kWeakProjective: return "weak-projective";
    case Task::kWeakNonprojective: return "weak-nonprojective";
    case Task::kStrong: return "strong";
  }
  return "";
}

std::optional<Task> task_from_name(std::string_view name) {
  for (Task t : {Task::kWeakProjective, Task::kWeakNonprojective, Task::kStrong}) {
    if (task_name(t) == name) return t;
  }
  return std::nullopt;
}

namespace {

class Stopwatch {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void fill_stats(SeparabilityReport& rep, const Reasoner& r, const Stopwatch& sw) {
  rep.stats.types = r.type_count();
  rep.stats.closure = r.closure().full_size();
  rep.stats.time_ms = sw.ms();
}

Concept conjunction_of(const std::vector<Concept>& cs) {
  Concept out = cs.front();
  for (std::size_t i = 1; i < cs.size(); ++i) out = Concept::conjunction(out, cs[i]);
  return out;
}

Concept disjunction_of(const std::vector<Concept>& cs) {
  Concept out = cs.front();
  for (std::size_t i = 1; i < cs.size(); ++i) out = Concept::disjunction(out, cs[i]);
  return out;
}

}  // namespace

SeparabilityReport weak_projective(const LabeledKB& lk, const SeparabilityOptions& opts) {
  Stopwatch sw;
  Reasoner r(lk.kb(), opts.limits);
  SeparabilityReport rep;
  rep.task = Task::kWeakProjective;
  rep.kb_satisfiable = r.satisfiable();
  Json cert;
  cert["kb_satisfiable"] = rep.kb_satisfiable;
  UCQ q = canonical_ucq(lk.kb().database, lk.positives());
  cert["query"] = render_ucq(q);
  Json negs = Json::array();
  rep.separable = rep.kb_satisfiable;
  for (Symbol b : lk.negatives()) {
    NegativeOutcome out;
    out.negative = b;
    if (rep.kb_satisfiable) {
      EntailmentResult res = check_ucq(r, q, b);
      out.separable = !res.entailed;
      if (out.separable) {
        out.countermodel = std::move(res.countermodel);
        out.witness_type = render_concept(r.type_concept(res.skeleton.at(b)));
      }
    }
    rep.separable = rep.separable && out.separable;
    Json nj{{"constant", b.str()}, {"separable", out.separable}};
    if (out.countermodel) {
      nj["countermodel"] = {{"domain_size", out.countermodel->domain_size()}, {"type_of_negative", out.witness_type}};
    }
    negs.push_back(std::move(nj));
    rep.negatives.push_back(std::move(out));
  }
  cert["negatives"] = std::move(negs);
  if (rep.separable) {
    Separator sep;
    sep.kind = SeparatorKind::kUcq;
    sep.text = render_ucq(q);
    sep.ucq = q;
    sep.verified = opts.verify && verify_weak_separator(lk.kb(), q, lk.positives(), lk.negatives());
    rep.separator = std::move(sep);
  }
  rep.certificate_json = cert.dump();
  fill_stats(rep, r, sw);
  return rep;
}

namespace {

SeparabilityReport nonprojective_impl(const LabeledKB& lk, const SeparabilityOptions& opts, Task task) {
  Stopwatch sw;
  Reasoner r(lk.kb(), opts.limits);
  SeparabilityReport rep;
  rep.task = task;
  rep.kb_satisfiable = r.satisfiable();
  Json cert;
  cert["kb_satisfiable"] = rep.kb_satisfiable;
  UCQ q = canonical_ucq(lk.kb().database, lk.positives());
  std::vector<TypeId> at_positives;
  for (Symbol a : lk.positives()) {
    for (TypeId t : r.types_at(a)) at_positives.push_back(t);
  }
  std::sort(at_positives.begin(), at_positives.end());
  at_positives.erase(std::unique(at_positives.begin(), at_positives.end()), at_positives.end());
  auto at_some_positive = [&](TypeId t) { return std::binary_search(at_positives.begin(), at_positives.end(), t); };

  Json negs = Json::array();
  rep.separable = rep.kb_satisfiable;
  std::vector<Concept> parts;
  bool all_unrealizable = true;
  for (Symbol b : lk.negatives()) {
    NegativeOutcome out;
    out.negative = b;
    Json nj{{"constant", b.str()}};
    if (rep.kb_satisfiable) {
      // Witness types unrealizable at every positive are tried first, as a
      // batch; then the remaining admissible ones.
      std::vector<TypeId> fresh, shared;
      for (TypeId t : r.types_at(b)) {
        if (!at_some_positive(t)) fresh.push_back(t);
        // (ii) complete connected types must not be realizable at a positive.
        else if (!(r.connected(t) && r.alci_complete(t))) shared.push_back(t);
      }
      for (const auto* pin : {&fresh, &shared}) {
        if (pin->empty()) continue;
        // (i) no homomorphism from the positives' components in some model
        // where b has one of the pinned types.
        EntailmentResult res = check_ucq(r, q, b, pin);
        if (res.entailed) continue;
        TypeId t = res.skeleton.at(b);
        out.separable = true;
        out.countermodel = std::move(res.countermodel);
        out.witness_type = render_concept(r.type_concept(t));
        out.witness_unrealizable_at_positives = pin == &fresh;
        if (pin == &fresh) parts.push_back(Concept::negation(r.type_concept(t)));
        break;
      }
    }
    all_unrealizable = all_unrealizable && out.witness_unrealizable_at_positives;
    rep.separable = rep.separable && out.separable;
    nj["separable"] = out.separable;
    if (out.separable) {
      nj["witness_type"] = out.witness_type;
      nj["witness_realizable_at_positive"] = !out.witness_unrealizable_at_positives;
    }
    negs.push_back(std::move(nj));
    rep.negatives.push_back(std::move(out));
  }
  cert["negatives"] = std::move(negs);
  if (rep.separable && all_unrealizable) {
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    Separator sep;
    sep.kind = SeparatorKind::kConcept;
    sep.concept_ = conjunction_of(parts);
    sep.text = render_concept(*sep.concept_);
    sep.verified = opts.verify && verify_weak_concept(lk.kb(), *sep.concept_, lk.positives(), lk.negatives());
    rep.separator = std::move(sep);
  } else if (rep.separable) {
    cert["note"] = "witnessing type is realizable at a positive example; no separating concept is synthesized";
  }
  rep.certificate_json = cert.dump();
  fill_stats(rep, r, sw);
  return rep;
}

}  // namespace

SeparabilityReport weak_nonprojective(const LabeledKB& lk, const SeparabilityOptions& opts) {
  return nonprojective_impl(lk, opts, Task::kWeakNonprojective);
}

SeparabilityReport projective_via_reduction(const LabeledKB& lk, const SeparabilityOptions& opts) {
  Symbol a = fresh_concept_name(lk.kb().signature(), "A");
  Concept ca = Concept::name(a);
  LabeledKB extended = lk.with_ontology(lk.kb().ontology.with(ConceptInclusion{ca, ca}));
  SeparabilityReport rep = nonprojective_impl(extended, opts, Task::kWeakProjective);
  Json cert = Json::parse(rep.certificate_json);
  cert["helper_concept_name"] = a.str();
  rep.certificate_json = cert.dump();
  return rep;
}

SeparabilityReport strong(const LabeledKB& lk, const SeparabilityOptions& opts) {
  Stopwatch sw;
  Reasoner r(lk.kb(), opts.limits);
  SeparabilityReport rep;
  rep.task = Task::kStrong;
  rep.kb_satisfiable = r.satisfiable();
  Json cert;
  cert["kb_satisfiable"] = rep.kb_satisfiable;
  Json pairs = Json::array();
  rep.separable = true;
  bool agree = true;
  for (Symbol a : lk.positives()) {
    for (Symbol b : lk.negatives()) {
      PairOutcome p{a, b, false, false};
      Database merged = merge_databases(lk.kb().database, a, b);
      p.merged_unsatisfiable = !Reasoner(KB{lk.kb().ontology, merged}, opts.limits).satisfiable();
      const auto& ta = r.types_at(a);
      const auto& tb = r.types_at(b);
      p.types_disjoint = std::none_of(ta.begin(), ta.end(),
                                      [&](TypeId t) { return std::find(tb.begin(), tb.end(), t) != tb.end(); });
      agree = agree && p.merged_unsatisfiable == p.types_disjoint;
      rep.separable = rep.separable && p.merged_unsatisfiable;
      pairs.push_back({{"positive", a.str()},
                       {"negative", b.str()},
                       {"merged_unsatisfiable", p.merged_unsatisfiable},
                       {"types_disjoint", p.types_disjoint}});
      rep.pairs.push_back(p);
    }
  }
  cert["pairs"] = std::move(pairs);
  cert["characterizations_agree"] = agree;
  if (rep.separable) {
    Separator sep;
    sep.kind = SeparatorKind::kConcept;
    if (!rep.kb_satisfiable) {
      sep.concept_ = Concept::bottom();
    } else {
      std::vector<TypeId> types;
      for (Symbol a : lk.positives()) {
        for (TypeId t : r.types_at(a)) types.push_back(t);
      }
      std::sort(types.begin(), types.end());
      types.erase(std::unique(types.begin(), types.end()), types.end());
      std::vector<Concept> disjuncts;
      for (TypeId t : types) disjuncts.push_back(r.type_concept(t));
      sep.concept_ = disjunction_of(disjuncts);
    }
    sep.text = render_concept(*sep.concept_);
    sep.verified = opts.verify && verify_strong_concept(lk.kb(), *sep.concept_, lk.positives(), lk.negatives());
    rep.separator = std::move(sep);
  }
  rep.certificate_json = cert.dump();
  fill_stats(rep, r, sw);
  return rep;
}

SeparabilityReport run_task(Task task, const LabeledKB& lk, const SeparabilityOptions& opts) {
  switch (task) {
    case Task::kWeakProjective: return weak_projective(lk, opts);
    case Task::kWeakNonprojective: return weak_nonprojective(lk, opts);
    case Task::kStrong: return strong(lk, opts);
  }
  throw Error("unknown task");
}

}  // namespace ontosep
