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

#include "ontosep/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "json.hpp"
#include "ontosep/report.hpp"

namespace ontosep {

namespace {

std::string format_error(int line, int column, const std::string& message, const std::string& expected) {
  std::string out = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  if (!expected.empty()) out += " (expected " + expected + ")";
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, std::string message, std::string expected)
    : Error(format_error(line, column, message, expected)),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { kIdent, kLBrace, kRBrace, kLParen, kRParen, kComma, kDot, kSubsumed, kRule, kPipe, kEq, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

const char* const kKeywords[] = {"top",    "bot",    "not",      "and",      "or",       "exists",
                                 "forall", "inv",    "ontology", "database", "positive", "negative"};

bool is_keyword(std::string_view s) {
  return std::find(std::begin(kKeywords), std::end(kKeywords), s) != std::end(kKeywords);
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    unsigned char ch = static_cast<unsigned char>(src[i]);
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      advance(1);
      continue;
    }
    Token t{Tok::kEnd, {}, line, col};
    if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      // Trailing primes name the renamed copies made by database merging.
      while (j < src.size() && src[j] == '\'') ++j;
      t.kind = Tok::kIdent;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    auto single = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, static_cast<char>(ch));
      advance(1);
      out.push_back(t);
    };
    switch (ch) {
      case '{': single(Tok::kLBrace); continue;
      case '}': single(Tok::kRBrace); continue;
      case '(': single(Tok::kLParen); continue;
      case ')': single(Tok::kRParen); continue;
      case ',': single(Tok::kComma); continue;
      case '.': single(Tok::kDot); continue;
      case '|': single(Tok::kPipe); continue;
      case '=': single(Tok::kEq); continue;
      default: break;
    }
    if (ch == '<' && i + 1 < src.size() && src[i + 1] == '=') {
      t.kind = Tok::kSubsumed;
      t.text = "<=";
      advance(2);
      out.push_back(t);
      continue;
    }
    if (ch == ':' && i + 1 < src.size() && src[i + 1] == '-') {
      t.kind = Tok::kRule;
      t.text = ":-";
      advance(2);
      out.push_back(t);
      continue;
    }
    std::string shown = std::isprint(ch) ? std::string(1, static_cast<char>(ch)) : "byte " + std::to_string(ch);
    throw ParseError(line, col, "unexpected character '" + shown + "'");
  }
  out.push_back(Token{Tok::kEnd, {}, line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_keyword(std::string_view kw) const { return at(Tok::kIdent) && peek().text == kw; }

  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail("unexpected " + describe(peek()), what);
    return toks_[pos_++];
  }
  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail("unexpected " + describe(peek()), "'" + std::string(kw) + "'");
    ++pos_;
  }
  Token identifier(const std::string& what) {
    Token t = expect(Tok::kIdent, what);
    if (is_keyword(t.text)) throw ParseError(t.line, t.column, "keyword '" + t.text + "' used as identifier", what);
    return t;
  }
  [[noreturn]] void fail(const std::string& message, const std::string& expected = {}) const {
    throw ParseError(peek().line, peek().column, message, expected);
  }

  // Records the arity of a predicate; the first conflicting use is an error.
  void use_predicate(const Token& t, int arity) {
    auto [it, fresh] = arity_.emplace(t.text, arity);
    if (!fresh && it->second != arity) {
      throw ParseError(t.line, t.column, "'" + t.text + "' used as both concept name and role name");
    }
  }

  Role role() {
    if (at_keyword("inv")) {
      ++pos_;
      expect(Tok::kLParen, "'('");
      Token name = identifier("role name");
      use_predicate(name, 2);
      expect(Tok::kRParen, "')'");
      return Role{Symbol(name.text), true};
    }
    Token name = identifier("role name or 'inv'");
    use_predicate(name, 2);
    return Role{Symbol(name.text), false};
  }

  Concept disjunction() {
    Concept c = conjunction();
    while (at_keyword("or")) {
      ++pos_;
      c = Concept::disjunction(c, conjunction());
    }
    return c;
  }

  Concept conjunction() {
    Concept c = unary();
    while (at_keyword("and")) {
      ++pos_;
      c = Concept::conjunction(c, unary());
    }
    return c;
  }

  Concept unary() {
    struct Depth {
      int& d;
      explicit Depth(int& x) : d(x) { ++d; }
      ~Depth() { --d; }
    } guard(depth_);
    if (depth_ > kMaxDepth) fail("formula nested too deeply");
    if (at_keyword("not")) {
      ++pos_;
      return Concept::negation(unary());
    }
    if (at_keyword("exists") || at_keyword("forall")) {
      bool exists = peek().text == "exists";
      ++pos_;
      Role r = role();
      expect(Tok::kDot, "'.'");
      Concept body = unary();
      return exists ? Concept::exists(r, body) : Concept::forall(r, body);
    }
    return primary();
  }

  Concept primary() {
    if (at_keyword("top")) {
      ++pos_;
      return Concept::top();
    }
    if (at_keyword("bot")) {
      ++pos_;
      return Concept::bottom();
    }
    if (at(Tok::kLParen)) {
      ++pos_;
      Concept c = disjunction();
      expect(Tok::kRParen, "')'");
      return c;
    }
    if (at(Tok::kIdent) && !is_keyword(peek().text)) {
      Token t = toks_[pos_++];
      use_predicate(t, 1);
      return Concept::name(Symbol(t.text));
    }
    fail("unexpected " + describe(peek()), "concept");
  }

  Token constant() {
    Token t = identifier("constant");
    if (!std::islower(static_cast<unsigned char>(t.text[0]))) {
      throw ParseError(t.line, t.column, "constant '" + t.text + "' must begin with a lowercase letter");
    }
    return t;
  }

  KbFile file() {
    KbFile f;
    std::vector<ConceptInclusion> cis;
    std::vector<UnaryAtom> unary;
    std::vector<BinaryAtom> binary;
    std::vector<Token> pos_tokens, neg_tokens;
    std::optional<Token> empty_pos, empty_neg;
    if (at(Tok::kEnd)) fail("empty input", "'ontology', 'database', 'positive' or 'negative'");
    while (!at(Tok::kEnd)) {
      if (at_keyword("ontology")) {
        ++pos_;
        expect(Tok::kLBrace, "'{'");
        while (!at(Tok::kRBrace)) {
          if (at(Tok::kEnd)) fail("unterminated ontology section", "'}'");
          Concept lhs = disjunction();
          expect(Tok::kSubsumed, "'<='");
          Concept rhs = disjunction();
          cis.push_back({lhs, rhs});
        }
        ++pos_;
      } else if (at_keyword("database")) {
        ++pos_;
        expect(Tok::kLBrace, "'{'");
        while (!at(Tok::kRBrace)) {
          if (at(Tok::kEnd)) fail("unterminated database section", "'}'");
          Token pred = identifier("atom");
          expect(Tok::kLParen, "'('");
          Token c1 = constant();
          if (at(Tok::kComma)) {
            ++pos_;
            Token c2 = constant();
            expect(Tok::kRParen, "')'");
            use_predicate(pred, 2);
            binary.push_back({Symbol(pred.text), Symbol(c1.text), Symbol(c2.text)});
          } else {
            expect(Tok::kRParen, "',' or ')'");
            use_predicate(pred, 1);
            unary.push_back({Symbol(pred.text), Symbol(c1.text)});
          }
        }
        ++pos_;
      } else if (at_keyword("positive") || at_keyword("negative")) {
        bool positive = peek().text == "positive";
        Token head = toks_[pos_++];
        (positive ? f.has_positive : f.has_negative) = true;
        auto& list = positive ? pos_tokens : neg_tokens;
        expect(Tok::kLBrace, "'{'");
        if (at(Tok::kRBrace)) {
          (positive ? empty_pos : empty_neg) = head;
        } else {
          list.push_back(constant());
          while (at(Tok::kComma)) {
            ++pos_;
            list.push_back(constant());
          }
        }
        expect(Tok::kRBrace, "',' or '}'");
      } else {
        fail("unexpected " + describe(peek()), "'ontology', 'database', 'positive' or 'negative'");
      }
    }
    f.kb = KB{Ontology(std::move(cis)), Database(std::move(unary), std::move(binary))};
    for (const auto* list : {&pos_tokens, &neg_tokens}) {
      for (const Token& t : *list) {
        if (!f.kb.database.has_constant(Symbol(t.text))) {
          throw ParseError(t.line, t.column, "unknown constant '" + t.text + "' in examples");
        }
      }
    }
    if (empty_pos) throw ParseError(empty_pos->line, empty_pos->column, "positive examples must be non-empty");
    if (empty_neg) throw ParseError(empty_neg->line, empty_neg->column, "negative examples must be non-empty");
    for (const Token& t : pos_tokens) f.positives.push_back(Symbol(t.text));
    for (const Token& t : neg_tokens) f.negatives.push_back(Symbol(t.text));
    return f;
  }

  CQ cq() {
    identifier("query head");
    expect(Tok::kLParen, "'('");
    std::vector<Symbol> answer{Symbol(identifier("answer variable").text)};
    while (at(Tok::kComma)) {
      ++pos_;
      answer.push_back(Symbol(identifier("answer variable").text));
    }
    expect(Tok::kRParen, "',' or ')'");
    Token rule = expect(Tok::kRule, "':-'");
    std::vector<QueryUnaryAtom> unary;
    std::vector<QueryBinaryAtom> binary;
    std::vector<QueryEquality> eqs;
    auto atom = [&] {
      Token first = identifier("atom");
      if (at(Tok::kEq)) {
        ++pos_;
        Token rhs = identifier("variable");
        eqs.push_back({Symbol(first.text), Symbol(rhs.text)});
        return;
      }
      expect(Tok::kLParen, "'(' or '='");
      Token v1 = identifier("variable");
      if (at(Tok::kComma)) {
        ++pos_;
        Token v2 = identifier("variable");
        expect(Tok::kRParen, "')'");
        use_predicate(first, 2);
        binary.push_back({Symbol(first.text), Symbol(v1.text), Symbol(v2.text)});
      } else {
        expect(Tok::kRParen, "',' or ')'");
        use_predicate(first, 1);
        unary.push_back({Symbol(first.text), Symbol(v1.text)});
      }
    };
    if (at(Tok::kIdent)) {
      atom();
      while (at(Tok::kComma)) {
        ++pos_;
        atom();
      }
    }
    try {
      return CQ(std::move(answer), std::move(unary), std::move(binary), std::move(eqs));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(rule.line, rule.column, e.what());
    }
  }

  UCQ ucq() {
    Token start = peek();
    std::vector<CQ> ds{cq()};
    while (at(Tok::kPipe)) {
      ++pos_;
      ds.push_back(cq());
    }
    try {
      return UCQ(std::move(ds));
    } catch (const Error& e) {
      throw ParseError(start.line, start.column, e.what());
    }
  }

  void finish() {
    if (!at(Tok::kEnd)) fail("unexpected " + describe(peek()), "end of input");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, int> arity_;
  int depth_ = 0;
  static constexpr int kMaxDepth = 1000;
};

}  // namespace

KbFile parse_kb_file(std::string_view text) {
  Parser p(text);
  KbFile f = p.file();
  p.finish();
  return f;
}

LabeledKB parse_labeled_kb(std::string_view text) {
  Parser p(text);
  KbFile f = p.file();
  p.finish();
  if (!f.has_positive) throw ParseError(1, 1, "positive examples must be non-empty", "'positive' section");
  if (!f.has_negative) throw ParseError(1, 1, "negative examples must be non-empty", "'negative' section");
  return LabeledKB(std::move(f.kb), std::move(f.positives), std::move(f.negatives));
}

Concept parse_concept(std::string_view text) {
  Parser p(text);
  Concept c = p.disjunction();
  p.finish();
  return c;
}

UCQ parse_ucq(std::string_view text) {
  Parser p(text);
  UCQ q = p.ucq();
  p.finish();
  return q;
}

std::variant<Concept, UCQ> parse_formula(std::string_view text) {
  if (text.find(":-") != std::string_view::npos) return parse_ucq(text);
  return parse_concept(text);
}

// -------------------------------------------------------------- rendering

std::string render_role(const Role& r) { return r.inverted ? "inv(" + r.name.str() + ")" : r.name.str(); }

namespace {

// Binding strength: 0 or, 1 and, 2 prefix operators, 3 atoms.
std::string render(Concept c, int context) {
  std::string s;
  int own = 3;
  if (c.is_top()) {
    s = "top";
  } else if (c.is_bottom()) {
    s = "bot";
  } else {
    switch (c.kind()) {
      case ConceptKind::kName:
        s = c.concept_name().str();
        break;
      case ConceptKind::kAnd:
        own = 1;
        s = render(c.left(), 1) + " and " + render(c.right(), 2);
        break;
      case ConceptKind::kExists:
        own = 2;
        s = "exists " + render_role(c.role()) + ". " + render(c.filler(), 2);
        break;
      case ConceptKind::kNot: {
        Concept inner = c.operand();
        if (inner.kind() == ConceptKind::kAnd && inner.left().kind() == ConceptKind::kNot &&
            inner.right().kind() == ConceptKind::kNot) {
          own = 0;
          s = render(inner.left().operand(), 0) + " or " + render(inner.right().operand(), 1);
        } else if (inner.kind() == ConceptKind::kExists && inner.filler().kind() == ConceptKind::kNot) {
          own = 2;
          s = "forall " + render_role(inner.role()) + ". " + render(inner.filler().operand(), 2);
        } else {
          own = 2;
          s = "not " + render(inner, 2);
        }
        break;
      }
    }
  }
  return own < context ? "(" + s + ")" : s;
}

}  // namespace

std::string render_concept(Concept c) { return render(c, 0); }

std::string render_cq(const CQ& q, std::string_view head) {
  std::string s(head);
  s += "(";
  for (std::size_t i = 0; i < q.answer_vars().size(); ++i) {
    if (i) s += ",";
    s += q.answer_vars()[i].str();
  }
  s += ") :-";
  bool first = true;
  auto sep = [&] {
    s += first ? " " : ", ";
    first = false;
  };
  for (const auto& a : q.unary_atoms()) {
    sep();
    s += a.predicate.str() + "(" + a.var.str() + ")";
  }
  for (const auto& a : q.binary_atoms()) {
    sep();
    s += a.predicate.str() + "(" + a.from.str() + "," + a.to.str() + ")";
  }
  for (const auto& e : q.equalities()) {
    sep();
    s += e.lhs.str() + " = " + e.rhs.str();
  }
  return s;
}

std::string render_ucq(const UCQ& q) {
  std::string s;
  for (std::size_t i = 0; i < q.disjuncts().size(); ++i) {
    if (i) s += " | ";
    s += render_cq(q.disjuncts()[i]);
  }
  return s;
}

std::string render_kb(const KB& kb, const std::vector<Symbol>& positives, const std::vector<Symbol>& negatives) {
  std::string s = "ontology {\n";
  for (const auto& ci : kb.ontology.inclusions()) {
    s += "  " + render_concept(ci.lhs) + " <= " + render_concept(ci.rhs) + "\n";
  }
  s += "}\ndatabase {\n";
  for (const auto& a : kb.database.unary_atoms()) s += "  " + a.concept_name.str() + "(" + a.constant.str() + ")\n";
  for (const auto& a : kb.database.binary_atoms()) {
    s += "  " + a.role.str() + "(" + a.from.str() + ", " + a.to.str() + ")\n";
  }
  s += "}\n";
  auto section = [&](const char* name, const std::vector<Symbol>& cs) {
    if (cs.empty()) return;
    s += std::string(name) + " { ";
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + cs[i].str();
    s += " }\n";
  };
  section("positive", positives);
  section("negative", negatives);
  return s;
}

std::string render_report(const SeparabilityReport& r) {
  nlohmann::ordered_json j;
  j["task"] = task_name(r.task);
  j["status"] = r.separable ? "separable" : "inseparable";
  if (r.separator) {
    j["separator"] = {{"kind", r.separator->kind == SeparatorKind::kUcq ? "ucq" : "concept"},
                      {"text", r.separator->text},
                      {"verified", r.separator->verified}};
  } else {
    j["separator"] = nullptr;
  }
  j["certificate"] = r.certificate_json.empty() ? nlohmann::ordered_json::object()
                                                : nlohmann::ordered_json::parse(r.certificate_json);
  j["stats"] = {{"types", r.stats.types}, {"closure", r.stats.closure}, {"time_ms", r.stats.time_ms}};
  return j.dump(2);
}

}  // namespace ontosep
