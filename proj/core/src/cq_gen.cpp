// Copyright 2026 The cqgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqgen/cq_gen.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <set>
#include <tuple>

#include "cqgen/errors.hpp"
#include "cqgen/text.hpp"

namespace cqgen {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<Line> lines_of(std::string_view doc) {
  std::vector<Line> out;
  std::size_t n = 1;
  std::size_t pos = 0;
  while (pos <= doc.size()) {
    std::size_t end = doc.find('\n', pos);
    if (end == std::string_view::npos) end = doc.size();
    std::string_view raw = doc.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    out.push_back({n++, std::string(raw)});
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError(ParseError::Kind::syntax, msg, line, 1);
}

const std::set<std::string> kSlotNames = {"LHS", "VERB", "RHS"};

std::vector<std::string> slot_names(std::string_view pattern, std::size_t line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while ((pos = pattern.find('{', pos)) != std::string_view::npos) {
    auto close = pattern.find('}', pos);
    if (close == std::string_view::npos) fail(line, "unterminated '{' in template");
    std::string name(pattern.substr(pos + 1, close - pos - 1));
    if (!kSlotNames.count(name)) fail(line, "undeclared slot '{" + name + "}'");
    out.push_back(name);
    pos = close + 1;
  }
  return out;
}

TransformationRule finish_rule(const std::map<std::string, Line>& fields,
                               std::size_t block_line) {
  auto need = [&](const char* key) -> const Line& {
    auto it = fields.find(key);
    if (it == fields.end()) fail(block_line, std::string("rule block lacks '") + key + "'");
    return it->second;
  };
  TransformationRule r;
  r.line = block_line;
  r.id = need("id").text;
  if (r.id.empty()) fail(need("id").number, "empty rule id");

  const Line& rel = need("relation");
  auto rc = relation_class_from_string(rel.text);
  if (!rc) fail(rel.number, "relation must be SPO or SS, got '" + rel.text + "'");
  r.relation_class = *rc;

  const Line& ax = need("axiom");
  if (ax.text == "subclass") {
    r.axiom_kind = AxiomKind::sub_class_of;
  } else if (ax.text == "equivalence") {
    r.axiom_kind = AxiomKind::equivalent_class;
  } else {
    fail(ax.number, "axiom must be subclass or equivalence, got '" + ax.text + "'");
  }

  const Line& ty = need("type");
  auto qt = question_type_from_string(ty.text);
  if (!qt) fail(ty.number, "unknown question type '" + ty.text + "'");
  r.question_type = *qt;

  const Line& tpl = need("template");
  r.pattern = text::normalize_whitespace(tpl.text);
  if (r.pattern.empty() || r.pattern.back() != '?') {
    fail(tpl.number, "template must end with '?'");
  }
  const auto slots = slot_names(r.pattern, tpl.number);
  auto mentions = [&](const char* s) {
    return std::find(slots.begin(), slots.end(), s) != slots.end();
  };
  const bool bad = (r.question_type == QuestionType::select_lhs && mentions("LHS")) ||
                   (r.question_type == QuestionType::select_rhs && mentions("RHS")) ||
                   (r.question_type == QuestionType::select_verb && mentions("VERB"));
  if (bad) fail(tpl.number, "template mentions the slot its question type asks for");

  if (auto it = fields.find("rewrite"); it != fields.end()) {
    if (it->second.text != "spo_to_ss") {
      fail(it->second.number, "unknown rewrite '" + it->second.text + "'");
    }
    const QueryTarget t = target_of(r.question_type);
    if (r.relation_class != RelationClass::SS ||
        t == QueryTarget::rhs || t == QueryTarget::verb) {
      fail(it->second.number,
           "rewrite = spo_to_ss needs relation = SS and an ASK or LHS question type");
    }
    r.rewrite_spo = true;
  }
  return r;
}

bool determiner(std::string_view word) {
  static const std::set<std::string, std::less<>> kWords = {
      "a", "an", "the", "of", "every", "all", "many", "no", "any", "some"};
  return kWords.count(text::to_lower(word)) != 0;
}

std::string strip_article(const std::string& s) {
  if (text::starts_with(s, "a ")) return s.substr(2);
  if (text::starts_with(s, "an ")) return s.substr(3);
  return s;
}

std::string last_word(const std::string& s) {
  auto end = s.find_last_not_of(' ');
  if (end == std::string::npos) return {};
  auto begin = s.find_last_of(' ', end);
  return s.substr(begin == std::string::npos ? 0 : begin + 1,
                  end - (begin == std::string::npos ? 0 : begin + 1) + 1);
}

std::string substitute(const std::string& pattern, const Segmentation& seg) {
  std::string out;
  std::size_t pos = 0;
  while (pos < pattern.size()) {
    auto open = pattern.find('{', pos);
    if (open == std::string::npos) {
      out += pattern.substr(pos);
      break;
    }
    out += pattern.substr(pos, open - pos);
    auto close = pattern.find('}', open);
    const std::string name = pattern.substr(open + 1, close - open - 1);
    if (name == "LHS") {
      out += seg.lhs_text;
    } else if (name == "VERB") {
      out += seg.verb_text;
    } else {
      out += determiner(last_word(out)) ? strip_article(seg.rhs_text) : seg.rhs_text;
    }
    pos = close + 1;
  }
  for (auto [from, to] : {std::pair{"every something that", "everything that"},
                          std::pair{"Every something that", "Everything that"}}) {
    std::size_t at;
    while ((at = out.find(from)) != std::string::npos) out.replace(at, std::strlen(from), to);
  }
  out = text::normalize_whitespace(out);
  for (std::size_t at; (at = out.find(" ?")) != std::string::npos;) out.erase(at, 1);
  return out;
}

CQTemplate make_template(const Verbalization& v, const TransformationRule& r,
                         const Segmentation& seg) {
  CQTemplate t;
  t.shape_id = v.shape_id;
  t.question_type = r.question_type;
  t.relation_class = v.relation_class;
  t.axiom_kind = v.axiom_kind;
  t.rule_id = r.id;
  t.text = substitute(r.pattern, seg);
  t.slots = text::bare_slots(t.text);
  return t;
}

}  // namespace

std::vector<TransformationRule> parse_rules(std::string_view document) {
  std::vector<TransformationRule> rules;
  std::set<std::string> ids;
  std::set<std::tuple<RelationClass, AxiomKind, QuestionType, std::string>> seen;
  std::map<std::string, Line> fields;
  std::size_t block_line = 0;

  auto flush = [&]() {
    if (fields.empty()) return;
    TransformationRule r = finish_rule(fields, block_line);
    if (!ids.insert(r.id).second) fail(block_line, "duplicate rule id '" + r.id + "'");
    if (!seen.insert({r.relation_class, r.axiom_kind, r.question_type, r.pattern}).second) {
      fail(block_line, "rule '" + r.id + "' duplicates an earlier rule");
    }
    rules.push_back(std::move(r));
    fields.clear();
  };

  for (const Line& line : lines_of(document)) {
    const std::string body = trim(line.text);
    if (body.empty()) {
      flush();
      continue;
    }
    if (body[0] == '#') continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) fail(line.number, "expected 'key = value'");
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    static const std::set<std::string> kKeys = {"id", "relation", "axiom", "type",
                                                "template", "rewrite"};
    if (!kKeys.count(key)) fail(line.number, "unknown key '" + key + "'");
    if (fields.empty()) block_line = line.number;
    if (!fields.emplace(key, Line{line.number, value}).second) {
      fail(line.number, "key '" + key + "' repeated in one block");
    }
  }
  flush();
  return rules;
}

SynonymTable parse_synonyms(std::string_view document) {
  SynonymTable table;
  for (const Line& line : lines_of(document)) {
    const std::string body = trim(line.text);
    if (body.empty() || body[0] == '#') continue;
    auto colon = body.find(':');
    if (colon == std::string::npos) fail(line.number, "expected 'marker: form | form'");
    std::string marker = trim(std::string_view(body).substr(0, colon));
    if (marker.empty() || marker.find_first_of("[] \t") != std::string::npos) {
      fail(line.number, "bad marker name '" + marker + "'");
    }
    std::vector<std::string> forms;
    std::string_view rest = std::string_view(body).substr(colon + 1);
    std::size_t pos = 0;
    while (true) {
      auto bar = rest.find('|', pos);
      std::string form = text::normalize_whitespace(
          rest.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos));
      if (form.empty()) fail(line.number, "empty form for marker '" + marker + "'");
      if (std::find(forms.begin(), forms.end(), form) != forms.end()) {
        fail(line.number, "form '" + form + "' repeated for marker '" + marker + "'");
      }
      forms.push_back(std::move(form));
      if (bar == std::string_view::npos) break;
      pos = bar + 1;
    }
    if (!table.sets.emplace(marker, std::move(forms)).second) {
      fail(line.number, "marker '" + marker + "' declared twice");
    }
  }
  return table;
}

std::vector<std::string> markers_of(std::string_view pattern) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while ((pos = pattern.find('[', pos)) != std::string_view::npos) {
    auto close = pattern.find(']', pos);
    if (close == std::string_view::npos) break;
    std::string name(pattern.substr(pos + 1, close - pos - 1));
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    pos = close + 1;
  }
  return out;
}

void check_markers(const std::vector<TransformationRule>& rules,
                   const SynonymTable& synonyms) {
  for (const auto& r : rules) {
    for (const auto& m : markers_of(r.pattern)) {
      if (!synonyms.contains(m)) {
        fail(r.line, "rule '" + r.id + "' uses undeclared marker [" + m + "]");
      }
    }
  }
}

RuleApplication apply_rules(const Verbalization& v, QuestionType qt,
                            const std::vector<TransformationRule>& rules) {
  RuleApplication out;
  std::optional<Verbalization> rewritten;
  for (const auto& r : rules) {
    if (r.axiom_kind != v.axiom_kind || r.question_type != qt) continue;
    if (r.relation_class == v.relation_class) {
      out.templates.push_back(make_template(v, r, v.segmentation));
    } else if (r.rewrite_spo && v.relation_class == RelationClass::SPO) {
      if (!rewritten) rewritten = spo_to_ss(v);
      out.templates.push_back(make_template(v, r, rewritten->segmentation));
    }
  }
  if (out.templates.empty()) {
    out.warnings.push_back(v.shape_id + ": no rule for " + to_string(v.relation_class) +
                           "/" + to_string(v.axiom_kind) + "/" + to_string(qt));
  }
  return out;
}

std::vector<CQTemplate> expand_synonyms(const CQTemplate& t,
                                        const SynonymTable& synonyms) {
  const auto markers = markers_of(t.text);
  std::vector<const std::vector<std::string>*> forms;
  for (const auto& m : markers) {
    auto it = synonyms.sets.find(m);
    if (it == synonyms.sets.end()) {
      throw PreconditionError("undeclared synonym marker [" + m + "] in '" + t.text + "'");
    }
    forms.push_back(&it->second);
  }

  std::vector<CQTemplate> out;
  std::vector<std::size_t> choice(markers.size(), 0);
  while (true) {
    CQTemplate e = t;
    std::string text = t.text;
    for (std::size_t i = 0; i < markers.size(); ++i) {
      const std::string token = "[" + markers[i] + "]";
      const std::string& form = (*forms[i])[choice[i]];
      const bool elide = determiner(last_word(form));
      for (std::size_t at; (at = text.find(token)) != std::string::npos;) {
        text.replace(at, token.size(), form);
        if (!elide) continue;
        const std::size_t after = at + form.size();
        for (std::string_view article : {" a ", " an "}) {
          if (text.compare(after, article.size(), article) == 0) {
            text.erase(after + 1, article.size() - 1);
            break;
          }
        }
      }
      e.synonym_choices[markers[i]] = form;
    }
    if (!text.empty()) {
      text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    }
    e.text = text::normalize_whitespace(text);
    e.slots = text::bare_slots(e.text);
    out.push_back(std::move(e));

    std::size_t i = 0;
    while (i < markers.size() && ++choice[i] == forms[i]->size()) choice[i++] = 0;
    if (i == markers.size()) break;
  }
  return out;
}

}  // namespace cqgen
