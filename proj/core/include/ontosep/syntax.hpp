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

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "ontosep/concept.hpp"
#include "ontosep/error.hpp"
#include "ontosep/kb.hpp"
#include "ontosep/query.hpp"

namespace ontosep {

struct SeparabilityReport;

/// Syntax or semantic error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string message, std::string expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  /// What the parser would have accepted at this position; may be empty.
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string message_;
  std::string expected_;
};

/// Contents of a KB file; the example sections may be absent.
struct KbFile {
  KB kb;
  std::vector<Symbol> positives;
  std::vector<Symbol> negatives;
  bool has_positive = false;
  bool has_negative = false;
};

/// Parses ontology/database/positive/negative sections without requiring
/// the example sections.
KbFile parse_kb_file(std::string_view text);
LabeledKB parse_labeled_kb(std::string_view text);
Concept parse_concept(std::string_view text);
/// `q(x) :- A(x), r(x,y) | q(x) :- B(x)`; an empty body is allowed.
UCQ parse_ucq(std::string_view text);
/// A UCQ if the text contains ":-", otherwise a concept.
std::variant<Concept, UCQ> parse_formula(std::string_view text);

std::string render_role(const Role& r);
std::string render_concept(Concept c);
std::string render_cq(const CQ& q, std::string_view head = "q");
std::string render_ucq(const UCQ& q);
/// Re-parseable text for a KB with optional example sections.
std::string render_kb(const KB& kb, const std::vector<Symbol>& positives = {},
                      const std::vector<Symbol>& negatives = {});
std::string render_report(const SeparabilityReport& r);

}  // namespace ontosep
