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

#include "cqgen/coverage.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

#include "cqgen/errors.hpp"
#include "cqgen/sparql.hpp"
#include "cqgen/text.hpp"
#include "json_compat.hpp"

namespace cqgen {

namespace {

using rdf::Term;
using rdf::Triple;
namespace vocab = rdf::vocab;

bool axiom_predicate(const std::string& p) {
  return p == vocab::rdfs_sub_class_of || p == vocab::owl_equivalent_class;
}

const std::string& disjoint_with() {
  static const std::string iri = vocab::owl("disjointWith");
  return iri;
}

bool integer_datatype(const std::string& dt) {
  static const std::set<std::string> kTypes = {
      "integer", "nonNegativeInteger", "positiveInteger", "nonPositiveInteger",
      "negativeInteger", "int", "long", "short", "byte", "unsignedInt",
      "unsignedLong", "unsignedShort", "unsignedByte"};
  return text::starts_with(dt, rdf::ns::xsd) &&
         kTypes.count(std::string(dt.substr(rdf::ns::xsd.size())));
}

Term normalize_literal(const Term& t) {
  if (!integer_datatype(t.datatype)) return t;
  std::string v = t.value;
  bool negative = false;
  if (!v.empty() && (v[0] == '+' || v[0] == '-')) {
    negative = v[0] == '-';
    v.erase(0, 1);
  }
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return t;
  }
  v.erase(0, std::min(v.find_first_not_of('0'), v.size() - 1));
  if (negative && v != "0") v = "-" + v;
  return Term::literal(v, vocab::xsd_integer);
}

class Canonicalizer {
 public:
  Canonicalizer(const rdf::Graph& g, std::string target) : target_(std::move(target)) {
    for (const auto& t : g.triples()) {
      if (!by_subject_.count(t.subject)) subjects_.push_back(t.subject);
      by_subject_[t.subject].push_back(&t);
      if (t.object.is_blank()) ++refcount_[t.object];
    }
  }

  rdf::Graph run() {
    std::vector<std::pair<std::string, Term>> roots;
    for (const Term& s : subjects_) {
      if (!s.is_blank() || refcount_[s] != 1) roots.emplace_back(statement_key(s), s);
    }
    std::stable_sort(roots.begin(), roots.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, s] : roots) emit_subject(s);
    // Blank nodes reachable only through a cycle.
    while (true) {
      std::vector<std::pair<std::string, Term>> rest;
      for (const Term& s : subjects_) {
        if (!done_.count(s)) rest.emplace_back(statement_key(s), s);
      }
      if (rest.empty()) break;
      std::stable_sort(rest.begin(), rest.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      emit_subject(rest.front().second);
    }
    return std::move(out_);
  }

  std::vector<PlaceholderKind> signature() const { return signature_; }

 private:
  using Pairs = std::vector<const Triple*>;

  PlaceholderKind object_kind(const Triple& t) const {
    const std::string& p = t.predicate.value;
    if (p == vocab::owl_on_data_range) return PlaceholderKind::DT;
    if (p == vocab::owl_has_value) return PlaceholderKind::I;
    if (p == vocab::owl_on_property) {
      auto it = by_subject_.find(t.subject);
      if (it != by_subject_.end()) {
        for (const Triple* u : it->second) {
          if (u->predicate.value == vocab::owl_on_data_range ||
              (u->predicate.value == vocab::owl_has_value && u->object.is_literal())) {
            return PlaceholderKind::DP;
          }
        }
      }
      return PlaceholderKind::OP;
    }
    return PlaceholderKind::C;
  }

  bool abstracted(const Triple& t, bool object_side) const {
    const Term& term = object_side ? t.object : t.subject;
    if (!term.is_iri() || term.value == vocab::rdf_nil) return false;
    if (object_side && t.predicate.value == vocab::rdf_type) {
      return !rdf::is_reserved_iri(term.value);
    }
    return true;
  }

  std::string term_key(const Term& t) const {
    switch (t.kind) {
      case rdf::TermKind::variable: return t.value == target_ ? "?x" : "?v";
      case rdf::TermKind::literal: return normalize_literal(t).to_string();
      case rdf::TermKind::blank: return "_";
      case rdf::TermKind::iri: return t.to_string();
    }
    return {};
  }

  std::string pair_key(const Triple& t, std::set<Term>& path) const {
    std::string key = t.predicate.is_variable() ? term_key(t.predicate) : t.predicate.value;
    key += ' ';
    if (abstracted(t, true)) {
      key += to_string(object_kind(t));
    } else if (t.object.is_blank() && inline_blank(t.object) && !path.count(t.object)) {
      key += "[" + body_key(t.object, path) + "]";
    } else {
      key += term_key(t.object);
    }
    return key;
  }

  bool inline_blank(const Term& b) const {
    auto it = refcount_.find(b);
    return it != refcount_.end() && it->second == 1;
  }

  std::string body_key(const Term& s, std::set<Term>& path) const {
    path.insert(s);
    std::vector<std::string> keys;
    auto it = by_subject_.find(s);
    if (it != by_subject_.end()) {
      for (const Triple* t : it->second) keys.push_back(pair_key(*t, path));
    }
    path.erase(s);
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (const auto& k : keys) out += k + ";";
    return out;
  }

  std::string statement_key(const Term& s) const {
    std::set<Term> path;
    std::string subject = s.is_iri() ? "C" : term_key(s);
    return subject + "{" + body_key(s, path) + "}";
  }

  Pairs sorted_pairs(const Term& s) const {
    Pairs pairs;
    auto it = by_subject_.find(s);
    if (it == by_subject_.end()) return pairs;
    std::vector<std::pair<std::string, const Triple*>> keyed;
    for (const Triple* t : it->second) {
      std::set<Term> path{s};
      keyed.emplace_back(pair_key(*t, path), t);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [k, t] : keyed) pairs.push_back(t);
    return pairs;
  }

  Term rename(const Term& t, std::optional<PlaceholderKind> kind) {
    switch (t.kind) {
      case rdf::TermKind::variable: {
        if (t.value == target_) return Term::variable("x");
        auto [it, fresh] = variables_.try_emplace(t.value);
        if (fresh) it->second = "v" + std::to_string(variables_.size());
        return Term::variable(it->second);
      }
      case rdf::TermKind::blank: {
        auto [it, fresh] = blanks_.try_emplace(t.value);
        if (fresh) it->second = "c" + std::to_string(blanks_.size());
        return Term::blank(it->second);
      }
      case rdf::TermKind::literal:
        return normalize_literal(t);
      case rdf::TermKind::iri:
        if (!kind) return t;
        {
          auto it = iris_.find(t.value);
          if (it == iris_.end()) {
            PlaceholderId id{*kind, ++counters_[*kind]};
            signature_.push_back(*kind);
            it = iris_.emplace(t.value, id).first;
          }
          return Term::iri(it->second.iri());
        }
    }
    return t;
  }

  void emit_subject(const Term& s) {
    if (!done_.insert(s).second) return;
    for (const Triple* t : sorted_pairs(s)) {
      Term subject = rename(t->subject, abstracted(*t, false)
                                            ? std::optional(PlaceholderKind::C)
                                            : std::nullopt);
      Term predicate = rename(t->predicate, std::nullopt);
      Term object = rename(t->object, abstracted(*t, true)
                                          ? std::optional(object_kind(*t))
                                          : std::nullopt);
      out_.add(subject, predicate, object);
      if (t->object.is_blank() && inline_blank(t->object)) emit_subject(t->object);
    }
  }

  std::string target_;
  std::vector<Term> subjects_;
  std::map<Term, Pairs> by_subject_;
  std::map<Term, std::size_t> refcount_;
  std::set<Term> done_;
  std::map<std::string, PlaceholderId> iris_;
  std::map<PlaceholderKind, unsigned> counters_;
  std::map<std::string, std::string> variables_;
  std::map<std::string, std::string> blanks_;
  std::vector<PlaceholderKind> signature_;
  rdf::Graph out_;
};

std::optional<QueryTarget> locate_target(const rdf::Graph& g) {
  std::set<Term> rhs_nodes;
  for (const auto& t : g.triples()) {
    if (axiom_predicate(t.predicate.value) && t.object.is_blank()) rhs_nodes.insert(t.object);
  }
  const Term x = Term::variable("x");
  for (const auto& t : g.triples()) {
    const std::string& p = t.predicate.value;
    if (t.subject == x && axiom_predicate(p)) return QueryTarget::lhs;
    if (t.object != x) continue;
    if (axiom_predicate(p)) return QueryTarget::rhs;
    if (!rhs_nodes.count(t.subject)) continue;
    if (p == vocab::owl_on_property) return QueryTarget::verb;
    if (p == vocab::owl_some_values_from || p == vocab::owl_all_values_from ||
        p == vocab::owl_has_value || p == vocab::owl_on_class) {
      return QueryTarget::rhs;
    }
  }
  return std::nullopt;
}

QuestionType question_type_for(QueryTarget target, bool count) {
  switch (target) {
    case QueryTarget::lhs: return count ? QuestionType::count_lhs : QuestionType::select_lhs;
    case QueryTarget::rhs: return count ? QuestionType::count_rhs : QuestionType::select_rhs;
    case QueryTarget::verb: return count ? QuestionType::count_verb : QuestionType::select_verb;
    case QueryTarget::none: break;
  }
  return QuestionType::ask;
}

std::vector<std::string> cq_tokens(std::string_view s) {
  std::string t = text::normalize_whitespace(s);
  while (!t.empty() && std::string_view("?.!").find(t.back()) != std::string_view::npos) {
    t.pop_back();
    while (!t.empty() && t.back() == ' ') t.pop_back();
  }
  return text::split_words(t);
}

// `a` from the question, `b` from the template. Materialization turns
// "does ... be" into "is ...", so the auxiliary may surface as a copula.
bool word_eq(const std::string& a, const std::string& b) {
  if (a == b) return true;
  auto art = [](const std::string& w) { return w == "a" || w == "an"; };
  if (art(a) && art(b)) return true;
  return (b == "does" && a == "is") || (b == "do" && a == "are") || (b == "did" && a == "was");
}

template <class T>
std::size_t edit_distance(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string nearest(const std::string& item, const std::vector<std::string>& candidates,
                    bool lower) {
  if (candidates.empty()) return "no templates to compare against";
  auto tokens = [&](const std::string& s) {
    return text::split_words(lower ? text::to_lower(s) : s);
  };
  const auto a = tokens(item);
  std::size_t best = static_cast<std::size_t>(-1);
  const std::string* best_text = nullptr;
  for (const auto& c : candidates) {
    const std::size_t d = edit_distance(a, tokens(c));
    if (d < best) {
      best = d;
      best_text = &c;
    }
  }
  return "nearest template (token distance " + std::to_string(best) + "): " + *best_text;
}

MissCategory categorize(const CanonicalQueryForm& f) {
  if (f.uses_union) return MissCategory::union_keyword;
  if (f.uses_disjoint_with) return MissCategory::disjoint_with;
  if (f.target_occurrences > 1) return MissCategory::constrained_target;
  if (f.auxiliary_variables > 0) return MissCategory::aux_variables;
  if (!f.question_type) return MissCategory::nested_target;
  return MissCategory::other;
}

}  // namespace

CanonicalQueryForm canonicalize_query(std::string_view query) {
  const SparqlQuery q = parse_sparql(query);
  if (q.select_all || q.projection.size() > 1) {
    throw PreconditionError("query projects more than one variable");
  }
  const bool ask = q.form == SparqlQuery::Form::ask;
  const std::string target = ask ? std::string() : q.projection.front();

  CanonicalQueryForm f;
  f.uses_union = q.uses_union;
  std::set<std::string> variables;
  for (const auto& t : q.pattern.triples()) {
    for (const Term* term : {&t.subject, &t.predicate, &t.object}) {
      if (!term->is_variable()) continue;
      variables.insert(term->value);
      if (term->value == target) ++f.target_occurrences;
    }
    if (t.predicate.value == disjoint_with()) f.uses_disjoint_with = true;
  }
  f.auxiliary_variables = variables.size() - (variables.count(target) ? 1 : 0);

  Canonicalizer canon(q.pattern, target);
  const rdf::Graph body = canon.run();
  f.placeholder_signature = canon.signature();

  rdf::WriterOptions options;
  options.compact = true;
  options.outer_predicates = {vocab::rdfs_sub_class_of, vocab::owl_equivalent_class,
                              disjoint_with()};
  options.render = [](const Term& t) -> std::optional<std::string> {
    if (!t.is_iri()) return std::nullopt;
    if (auto id = PlaceholderId::from_iri(t.value)) return id->token();
    return std::nullopt;
  };

  std::string head;
  if (ask) {
    head = "ASK WHERE {";
    f.question_type = QuestionType::ask;
  } else {
    head = q.count ? "SELECT (COUNT(?x) AS ?n) WHERE {" : "SELECT ?x WHERE {";
    if (auto target_pos = locate_target(body)) {
      f.question_type = question_type_for(*target_pos, q.count);
    }
  }
  f.text = head + rdf::write_statements(body, options) + "}";
  return f;
}

bool match_cq(std::string_view cq, std::string_view cq_template, std::size_t max_span) {
  const auto words = cq_tokens(text::to_lower(cq));
  const auto raw = cq_tokens(cq_template);
  std::vector<std::string> pattern;
  std::vector<bool> slot;
  for (const auto& w : raw) {
    slot.push_back(PlaceholderId::from_slot(w).has_value());
    pattern.push_back(text::to_lower(w));
  }
  const std::size_t n = words.size();
  const std::size_t m = pattern.size();
  // memo[i * (m + 1) + j]: 0 unknown, 1 fails, 2 matches.
  std::vector<char> memo((n + 1) * (m + 1), 0);
  auto go = [&](auto&& self, std::size_t i, std::size_t j) -> bool {
    char& cell = memo[i * (m + 1) + j];
    if (cell) return cell == 2;
    bool ok = false;
    if (j == m) {
      ok = i == n;
    } else if (slot[j]) {
      for (std::size_t len = std::min(max_span, n - i); len >= 1 && !ok; --len) {
        ok = self(self, i + len, j + 1);
      }
    } else {
      ok = i < n && word_eq(words[i], pattern[j]) && self(self, i + 1, j + 1);
    }
    cell = ok ? 2 : 1;
    return ok;
  };
  return go(go, 0, 0);
}

const char* to_string(MissCategory c) noexcept {
  switch (c) {
    case MissCategory::aux_variables: return "aux-variables";
    case MissCategory::union_keyword: return "union-keyword";
    case MissCategory::disjoint_with: return "disjoint-with";
    case MissCategory::nested_target: return "nested-target";
    case MissCategory::multi_projection: return "multi-projection";
    case MissCategory::constrained_target: return "constrained-target";
    case MissCategory::parse_error: return "parse-error";
    case MissCategory::other: return "other";
  }
  return "other";
}

CoverageReport coverage_report(const Dataset& d, const std::vector<std::string>& queries,
                               const std::vector<std::string>& cqs,
                               const CoverageOptions& options) {
  std::set<std::string> query_texts;
  for (const auto& p : d.pairs) query_texts.insert(p.query.text);
  for (const auto& q : d.unpaired_queries) query_texts.insert(q.text);
  std::set<std::string> canonical;
  for (const auto& q : query_texts) canonical.insert(canonicalize_query(q).text);
  const std::vector<std::string> canonical_list(canonical.begin(), canonical.end());

  std::set<std::string> cq_set;
  for (const auto& p : d.pairs) cq_set.insert(p.cq.text);
  const std::vector<std::string> cq_list(cq_set.begin(), cq_set.end());

  CoverageReport r;
  for (const auto& q : queries) {
    ++r.total_queries;
    UncoveredItem miss;
    miss.kind = UncoveredItem::Kind::query;
    miss.text = q;
    try {
      const CanonicalQueryForm f = canonicalize_query(q);
      if (canonical.count(f.text)) {
        ++r.covered_queries;
        continue;
      }
      miss.category = categorize(f);
      miss.diagnostic = nearest(f.text, canonical_list, false);
    } catch (const ParseError& e) {
      miss.category = MissCategory::parse_error;
      miss.diagnostic = e.what();
    } catch (const PreconditionError& e) {
      miss.category = MissCategory::multi_projection;
      miss.diagnostic = e.what();
    }
    r.uncovered_items.push_back(std::move(miss));
  }
  for (const auto& cq : cqs) {
    ++r.total_cqs;
    const bool hit = std::any_of(cq_list.begin(), cq_list.end(), [&](const std::string& t) {
      return match_cq(cq, t, options.max_span);
    });
    if (hit) {
      ++r.covered_cqs;
      continue;
    }
    UncoveredItem miss;
    miss.kind = UncoveredItem::Kind::cq;
    miss.text = cq;
    miss.diagnostic = nearest(cq, cq_list, true);
    r.uncovered_items.push_back(std::move(miss));
  }
  return r;
}

namespace {

double percent(std::size_t covered, std::size_t total) {
  return total ? 100.0 * static_cast<double>(covered) / static_cast<double>(total) : 0.0;
}

}  // namespace

std::string coverage_to_json(const CoverageReport& r) {
  Json items = Json::array();
  for (const auto& u : r.uncovered_items) {
    items.push_back(Json{{"kind", u.kind == UncoveredItem::Kind::query ? "query" : "cq"},
                         {"text", u.text},
                         {"category", to_string(u.category)},
                         {"diagnostic", u.diagnostic}});
  }
  Json j{{"queries", Json{{"total", r.total_queries},
                          {"covered", r.covered_queries},
                          {"percent", percent(r.covered_queries, r.total_queries)}}},
         {"cqs", Json{{"total", r.total_cqs},
                      {"covered", r.covered_cqs},
                      {"percent", percent(r.covered_cqs, r.total_cqs)}}},
         {"uncovered", items}};
  return j.dump(2) + "\n";
}

std::string coverage_summary(const CoverageReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "queries: %zu/%zu covered (%.2f%%)\ncqs: %zu/%zu covered (%.2f%%)\n",
                r.covered_queries, r.total_queries, percent(r.covered_queries, r.total_queries),
                r.covered_cqs, r.total_cqs, percent(r.covered_cqs, r.total_cqs));
  std::string out = buf;
  std::map<std::string, std::size_t> by_category;
  for (const auto& u : r.uncovered_items) {
    if (u.kind == UncoveredItem::Kind::query) ++by_category[to_string(u.category)];
  }
  for (const auto& [c, n] : by_category) {
    out += "  uncovered queries, " + c + ": " + std::to_string(n) + "\n";
  }
  return out;
}

std::vector<std::string> load_queries(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(path)) {
      if (e.is_regular_file() && e.path().extension() == ".rq") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      std::string q = text::read_file(f.string());
      if (!text::normalize_whitespace(q).empty()) out.push_back(std::move(q));
    }
    return out;
  }
  const std::string doc = text::read_file(path);
  std::string cur;
  std::size_t pos = 0;
  auto flush = [&]() {
    if (!text::normalize_whitespace(cur).empty()) out.push_back(cur);
    cur.clear();
  };
  while (pos <= doc.size()) {
    std::size_t end = doc.find('\n', pos);
    if (end == std::string::npos) end = doc.size();
    const std::string line = doc.substr(pos, end - pos);
    pos = end + 1;
    if (text::normalize_whitespace(line).empty()) {
      flush();
    } else {
      cur += line + "\n";
    }
  }
  flush();
  return out;
}

std::vector<std::string> load_cqs(const std::string& path) {
  std::vector<std::string> out;
  const std::string doc = text::read_file(path);
  std::size_t pos = 0;
  while (pos <= doc.size()) {
    std::size_t end = doc.find('\n', pos);
    if (end == std::string::npos) end = doc.size();
    const std::string line = text::normalize_whitespace(doc.substr(pos, end - pos));
    pos = end + 1;
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

}  // namespace cqgen
