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

#include "cqgen/materializer.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <random>
#include <set>

#include "cqgen/errors.hpp"
#include "cqgen/text.hpp"
#include "json_compat.hpp"

namespace cqgen {

namespace {

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }

bool vowel(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return true;
    default: return false;
  }
}

// Spelling-based, with the common exceptions ("a university", "an hour").
bool takes_an(const std::string& word) {
  const std::string w = text::to_lower(word);
  for (std::string_view p : {"uni", "use", "usu", "uti", "eu", "one", "once"}) {
    if (text::starts_with(w, p)) return false;
  }
  for (std::string_view p : {"hour", "honest", "honor", "honour", "heir"}) {
    if (text::starts_with(w, p)) return true;
  }
  return !w.empty() && vowel(w[0]);
}

class BucketBuilder {
 public:
  explicit BucketBuilder(std::vector<VocabEntry>& out) : out_(out) {}
  void add(const std::string& iri, const std::string& label) {
    if (seen_.insert(iri).second) out_.push_back({iri, label});
  }
  bool has(const std::string& iri) const { return seen_.count(iri) != 0; }

 private:
  std::vector<VocabEntry>& out_;
  std::set<std::string> seen_;
};

std::string first_label(const rdf::Graph& g, const std::string& iri) {
  std::string fallback;
  for (const auto& o : g.objects(rdf::Term::iri(iri), rdf::vocab::rdfs_label)) {
    if (!o.is_literal() || o.value.empty()) continue;
    if (o.language.empty() || o.language == "en") return o.value;
    if (fallback.empty()) fallback = o.value;
  }
  if (!fallback.empty()) return fallback;
  std::string label = label_from_local_name(rdf::local_name(iri));
  return label.empty() ? iri : label;
}

// Saturating product of falling factorials n!/(n-m)! per kind.
std::size_t space_size(const std::map<PlaceholderKind, std::size_t>& need,
                       const Vocabulary& vocab) {
  constexpr std::size_t kCap = std::size_t{1} << 62;
  std::size_t total = 1;
  for (const auto& [kind, m] : need) {
    std::size_t n = vocab.bucket(kind).size();
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t f = n - i;
      if (total > kCap / std::max<std::size_t>(f, 1)) return kCap;
      total *= f;
    }
  }
  return total;
}

std::string lower_word(std::string_view w) { return text::to_lower(w); }

}  // namespace

const std::vector<VocabEntry>& Vocabulary::bucket(PlaceholderKind kind) const {
  switch (kind) {
    case PlaceholderKind::C: return classes;
    case PlaceholderKind::I: return individuals;
    case PlaceholderKind::OP: return object_properties;
    case PlaceholderKind::DP: return data_properties;
    case PlaceholderKind::DT: return datatypes;
  }
  return classes;
}

bool Vocabulary::empty() const {
  return classes.empty() && object_properties.empty() && data_properties.empty() &&
         individuals.empty() && datatypes.empty();
}

std::string label_from_local_name(std::string_view local) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) tokens.push_back(std::move(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < local.size(); ++i) {
    const char c = local[i];
    if (c == '_' || c == '-' || c == ' ') {
      flush();
      continue;
    }
    if (is_upper(c) && !cur.empty()) {
      const bool after_lower = is_lower(cur.back()) || std::isdigit(static_cast<unsigned char>(cur.back()));
      const bool acronym_end = is_upper(cur.back()) && i + 1 < local.size() && is_lower(local[i + 1]);
      if (after_lower || acronym_end) flush();
    }
    cur += c;
  }
  flush();
  std::string out;
  for (const auto& t : tokens) {
    const bool all_caps = t.size() > 1 && std::none_of(t.begin(), t.end(), is_lower);
    if (!out.empty()) out += ' ';
    out += all_caps ? t : text::to_lower(t);
  }
  return out;
}

Vocabulary extract_vocabulary(const rdf::Graph& graph) {
  using namespace rdf;
  Vocabulary v;
  BucketBuilder classes(v.classes), ops(v.object_properties), dps(v.data_properties),
      inds(v.individuals), dts(v.datatypes);
  std::vector<std::string> subjects;
  std::set<std::string> seen_subjects;
  for (const auto& t : graph.triples()) {
    if (!t.subject.is_iri()) continue;
    if (seen_subjects.insert(t.subject.value).second) subjects.push_back(t.subject.value);
    if (t.predicate.value != vocab::rdf_type || !t.object.is_iri()) continue;
    const std::string& s = t.subject.value;
    const std::string& type = t.object.value;
    if (type == vocab::owl_class) {
      classes.add(s, first_label(graph, s));
    } else if (type == vocab::owl_object_property) {
      ops.add(s, first_label(graph, s));
    } else if (type == vocab::owl_datatype_property) {
      dps.add(s, first_label(graph, s));
    } else if (type == vocab::owl_named_individual) {
      inds.add(s, first_label(graph, s));
    } else if (type == vocab::rdfs_datatype) {
      dts.add(s, first_label(graph, s));
    }
  }
  for (const auto& dp : v.data_properties) {
    for (const auto& r : graph.objects(Term::iri(dp.iri), vocab::rdfs_range)) {
      if (r.is_iri() && text::starts_with(r.value, ns::xsd)) {
        dts.add(r.value, std::string(local_name(r.value)));
      }
    }
  }
  for (const auto& s : subjects) {
    if (!classes.has(s) && !ops.has(s) && !dps.has(s) && !inds.has(s) && !dts.has(s)) {
      ++v.skipped;
    }
  }
  return v;
}

std::vector<PlaceholderId> pair_slots(const TemplatePair& pair) {
  std::vector<PlaceholderId> out = pair.cq.slots;
  for (const auto& id : pair.query.slots) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  }
  return out;
}

std::vector<Assignment> enumerate_assignments(const TemplatePair& pair,
                                              const Vocabulary& vocab,
                                              std::size_t limit, std::uint64_t seed) {
  const auto slots = pair_slots(pair);
  std::map<PlaceholderKind, std::size_t> need;
  for (const auto& id : slots) ++need[id.kind];
  for (const auto& [kind, m] : need) {
    if (vocab.bucket(kind).size() < m) {
      throw PreconditionError("pair " + pair.pair_id + " needs " + std::to_string(m) + " " +
                              to_string(kind) + " resource(s), vocabulary has " +
                              std::to_string(vocab.bucket(kind).size()));
    }
  }

  std::vector<Assignment> out;
  if (limit == 0) return out;
  auto build = [&](const std::vector<std::size_t>& idx) {
    Assignment a;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      a[slots[i]] = vocab.bucket(slots[i].kind)[idx[i]];
    }
    return a;
  };
  auto injective = [&](const std::vector<std::size_t>& idx, std::size_t upto) {
    std::set<std::string> used;
    for (std::size_t i = 0; i < upto; ++i) {
      if (!used.insert(vocab.bucket(slots[i].kind)[idx[i]].iri).second) return false;
    }
    return true;
  };

  if (space_size(need, vocab) <= limit) {
    // Depth-first odometer with pruning on the first repeated IRI.
    std::vector<std::size_t> idx(slots.size(), 0);
    std::size_t depth = 0;
    if (slots.empty()) {
      out.push_back({});
      return out;
    }
    while (true) {
      if (idx[depth] < vocab.bucket(slots[depth].kind).size() && injective(idx, depth + 1)) {
        if (depth + 1 == slots.size()) {
          out.push_back(build(idx));
          if (out.size() == limit) return out;
          ++idx[depth];
        } else {
          idx[++depth] = 0;
        }
        continue;
      }
      if (idx[depth] < vocab.bucket(slots[depth].kind).size()) {
        ++idx[depth];
        continue;
      }
      if (depth == 0) break;
      ++idx[--depth];
    }
    return out;
  }

  std::mt19937_64 rng(seed);
  std::set<std::vector<std::size_t>> drawn;
  std::vector<std::size_t> idx(slots.size());
  const std::size_t max_attempts = limit * 1000 + 10000;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < limit; ++attempt) {
    for (std::size_t i = 0; i < slots.size(); ++i) {
      idx[i] = static_cast<std::size_t>(rng() % vocab.bucket(slots[i].kind).size());
    }
    if (!injective(idx, slots.size())) continue;
    if (!drawn.insert(idx).second) continue;
    out.push_back(build(idx));
  }
  return out;
}

const VerbExceptions& default_verb_exceptions() {
  static const VerbExceptions table{
      {{"have", "has"}, {"be", "is"}, {"do", "does"}, {"go", "goes"}}};
  return table;
}

VerbExceptions parse_verb_exceptions(std::string_view document) {
  VerbExceptions out = default_verb_exceptions();
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos <= document.size()) {
    std::size_t end = document.find('\n', pos);
    if (end == std::string_view::npos) end = document.size();
    const std::string line = text::normalize_whitespace(document.substr(pos, end - pos));
    pos = end + 1;
    ++n;
    if (line.empty() || line[0] == '#') continue;
    std::size_t arrow = line.find("->");
    std::size_t width = 2;
    if (arrow == std::string::npos) {
      arrow = line.find("→");
      width = std::string_view("→").size();
    }
    if (arrow == std::string::npos) {
      throw ParseError(ParseError::Kind::syntax, "expected 'base -> third-person form'", n, 1);
    }
    const std::string base = text::normalize_whitespace(line.substr(0, arrow));
    const std::string third = text::normalize_whitespace(line.substr(arrow + width));
    if (base.empty() || third.empty() || base.find(' ') != std::string::npos ||
        third.find(' ') != std::string::npos) {
      throw ParseError(ParseError::Kind::syntax, "verb forms must be single words", n, 1);
    }
    out.third_singular[base] = third;
  }
  return out;
}

namespace {

std::string to_base(const std::string& w, const VerbExceptions& exc) {
  for (const auto& [base, third] : exc.third_singular) {
    if (w == third) return base;
  }
  if (exc.third_singular.count(w)) return w;
  auto ends = [&](std::string_view s) { return text::ends_with(w, s); };
  if (w.size() > 3 && ends("ies")) return w.substr(0, w.size() - 3) + "y";
  for (std::string_view s : {"sses", "shes", "ches", "xes", "zes", "oes"}) {
    if (w.size() > s.size() && ends(s)) return w.substr(0, w.size() - 2);
  }
  if (ends("ss") || ends("us")) return w;
  if (w.size() > 1 && ends("s")) return w.substr(0, w.size() - 1);
  return w;
}

std::string to_third(const std::string& b, const VerbExceptions& exc) {
  if (auto it = exc.third_singular.find(b); it != exc.third_singular.end()) return it->second;
  auto ends = [&](std::string_view s) { return text::ends_with(b, s); };
  if (b.size() > 1 && ends("y") && !vowel(b[b.size() - 2])) {
    return b.substr(0, b.size() - 1) + "ies";
  }
  for (std::string_view s : {"s", "sh", "ch", "x", "z", "o"}) {
    if (ends(s)) return b + "es";
  }
  return b + "s";
}

bool plural_subject(const std::string& w) {
  static const std::set<std::string> kWords = {
      "things", "ones",  "classes", "entities",   "kinds",
      "types",  "sorts", "elements", "categories", "resources"};
  return kWords.count(w) != 0;
}

// Index of the do-support auxiliary governing the property at `i`.
std::optional<std::size_t> auxiliary_of(const std::vector<std::string>& cores,
                                        std::size_t i) {
  for (std::size_t k = i; k > 0; --k) {
    const std::string w = lower_word(cores[k - 1]);
    if (w == "does" || w == "do" || w == "did") return k - 1;
    auto id = PlaceholderId::from_slot(cores[k - 1]);
    if (id && id->is_property()) break;
  }
  return std::nullopt;
}

VerbForm verb_form_at(const std::vector<std::string>& cores, std::size_t i) {
  std::size_t j = i;
  while (j > 0) {
    const std::string w = lower_word(cores[j - 1]);
    if (w == "that" || w == "which" || w == "who") {
      --j;
      continue;
    }
    if (plural_subject(w)) return VerbForm::plural;
    break;
  }
  return auxiliary_of(cores, i) ? VerbForm::base : VerbForm::third_singular;
}

}  // namespace

std::string inflect_verb(std::string_view label, VerbForm form,
                         const VerbExceptions& exceptions) {
  const std::string l = text::normalize_whitespace(label);
  const auto space = l.find(' ');
  const std::string head = l.substr(0, space);
  const std::string rest = space == std::string::npos ? "" : l.substr(space);
  const std::string base = to_base(head, exceptions);
  switch (form) {
    case VerbForm::base: return base + rest;
    case VerbForm::plural: return (base == "be" ? "are" : base) + rest;
    case VerbForm::third_singular: break;
  }
  return to_third(base, exceptions) + rest;
}

std::string materialize_cq(std::string_view cq_text, const Assignment& a,
                           const VerbExceptions& exceptions) {
  const auto words = text::split_words(cq_text);
  std::vector<std::string> cores;
  std::vector<std::string> suffixes;
  for (const auto& w : words) {
    std::size_t end = w.size();
    while (end > 0 && std::string_view("?.,!;:").find(w[end - 1]) != std::string_view::npos) {
      --end;
    }
    cores.push_back(w.substr(0, end));
    suffixes.push_back(w.substr(end));
  }

  std::vector<std::string> out;
  for (std::size_t i = 0; i < cores.size(); ++i) {
    auto id = PlaceholderId::from_slot(cores[i]);
    if (!id) {
      out.push_back(cores[i] + suffixes[i]);
      continue;
    }
    auto it = a.find(*id);
    if (it == a.end()) throw PreconditionError("slot " + id->slot() + " is not assigned");
    std::string label = it->second.label;
    if (id->is_property()) {
      const VerbForm form = verb_form_at(cores, i);
      label = inflect_verb(label, form, exceptions);
      // "does C1 be part of" -> "is C1 part of"
      auto aux = form == VerbForm::base ? auxiliary_of(cores, i) : std::nullopt;
      if (aux && (label == "be" || text::starts_with(label, "be "))) {
        const std::string w = lower_word(cores[*aux]);
        std::string copula = w == "does" ? "is" : w == "do" ? "are" : "was";
        if (is_upper(out[*aux][0])) copula[0] = static_cast<char>(std::toupper(copula[0]));
        out[*aux] = copula + suffixes[*aux];
        label = label.size() > 2 ? label.substr(3) : std::string();
      }
    }
    if (!out.empty() && !label.empty()) {
      std::string& prev = out.back();
      const std::string lw = lower_word(prev);
      if (lw == "a" || lw == "an") {
        const bool cap = is_upper(prev[0]);
        prev = takes_an(label) ? "an" : "a";
        if (cap) prev[0] = 'A';
      }
    }
    out.push_back(label + suffixes[i]);
  }
  std::string result;
  for (const auto& w : out) {
    if (w.empty()) continue;
    if (!result.empty()) result += ' ';
    result += w;
  }
  if (!result.empty()) {
    result[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(result[0])));
  }
  return result;
}

std::string materialize_query(std::string_view query_text, const Assignment& a) {
  std::string out;
  std::size_t pos = 0;
  while (pos < query_text.size()) {
    const auto open = query_text.find('<', pos);
    if (open == std::string_view::npos) break;
    const auto close = query_text.find('>', open);
    if (close == std::string_view::npos) break;
    out += query_text.substr(pos, open - pos);
    auto id = PlaceholderId::from_slot(query_text.substr(open + 1, close - open - 1));
    if (id) {
      auto it = a.find(*id);
      if (it == a.end()) throw PreconditionError("slot " + id->slot() + " is not assigned");
      out += "<" + it->second.iri + ">";
    } else {
      out += query_text.substr(open, close - open + 1);
    }
    pos = close + 1;
  }
  if (pos < query_text.size()) out += query_text.substr(pos);
  return out;
}

MaterializedPair fill_templates(const TemplatePair& pair, const Assignment& a,
                                const VerbExceptions& exceptions) {
  for (const auto& id : pair_slots(pair)) {
    if (!a.count(id)) throw PreconditionError("slot " + id.slot() + " is not assigned");
  }
  MaterializedPair m;
  m.pair_id = pair.pair_id;
  m.assignment = a;
  m.cq_text = materialize_cq(pair.cq.text, a, exceptions);
  m.query_text = materialize_query(pair.query.text, a);
  return m;
}

MaterializeResult materialize_dataset(const Dataset& d, const Vocabulary& vocab,
                                      std::size_t limit, std::uint64_t seed,
                                      const VerbExceptions& exceptions) {
  MaterializeResult out;
  for (const auto& p : d.pairs) {
    const std::uint64_t pair_seed = seed ^ text::fnv1a(p.pair_id);
    try {
      for (const auto& a : enumerate_assignments(p, vocab, limit, pair_seed)) {
        out.pairs.push_back(fill_templates(p, a, exceptions));
      }
    } catch (const PreconditionError& e) {
      out.skipped.emplace_back(p.pair_id, e.what());
    }
  }
  return out;
}

std::string to_json_line(const MaterializedPair& m) {
  Json assignment = Json::object();
  for (const auto& [id, e] : m.assignment) {
    assignment[id.slot()] = Json{{"iri", e.iri}, {"label", e.label}};
  }
  return Json{{"pair_id", m.pair_id},
              {"cq", m.cq_text},
              {"query", m.query_text},
              {"assignment", assignment}}
      .dump();
}

}  // namespace cqgen
