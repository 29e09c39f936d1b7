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

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cqgen/rdf.hpp"

namespace cqgen::rdf {
namespace {

bool valid_local(std::string_view local) {
  if (local.empty()) return false;
  auto first = static_cast<unsigned char>(local.front());
  if (!(std::isalpha(first) || first == '_')) return false;
  return std::all_of(local.begin(), local.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '-';
  });
}

bool is_integer_lexical(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

std::string escape_string(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

class Writer {
 public:
  Writer(const Graph& graph, const WriterOptions& options)
      : graph_(graph), options_(options) {
    PrefixMap all = builtin_prefixes();
    for (const auto& p : graph.prefixes()) {
      auto it = std::find_if(all.begin(), all.end(),
                             [&](const auto& e) { return e.first == p.first; });
      if (it != all.end()) {
        it->second = p.second;
      } else {
        all.push_back(p);
      }
    }
    prefixes_ = std::move(all);
    index();
  }

  std::string run() {
    std::vector<std::string> statements;
    for (const Term& subject : roots_) statements.push_back(statement(subject));
    std::string out;
    for (std::size_t i = 0; i < statements.size(); ++i) {
      if (options_.compact) {
        if (i) out += " . ";
        out += statements[i];
      } else {
        out += statements[i];
        out += " .\n";
      }
    }
    return out;
  }

 private:
  void index() {
    for (const auto& t : graph_.triples()) {
      if (!by_subject_.count(t.subject)) subjects_.push_back(t.subject);
      by_subject_[t.subject].push_back(&t);
      if (t.object.is_blank()) ++refcount_[t.object];
    }
    for (const auto& [node, count] : refcount_) {
      if (count >= 2) labelled_.insert(node);
    }
    // Roots: every non-blank subject, unreferenced blanks, shared blanks.
    auto is_root = [&](const Term& s) {
      return !s.is_blank() || refcount_[s] == 0 || labelled_.count(s);
    };
    for (const Term& s : subjects_) {
      if (is_root(s)) roots_.push_back(s);
    }
    // Blank nodes only reachable through a cycle get a label.
    while (true) {
      std::set<Term> seen;
      for (const Term& r : roots_) visit(r, seen);
      auto missing = std::find_if(subjects_.begin(), subjects_.end(),
                                  [&](const Term& s) { return !seen.count(s); });
      if (missing == subjects_.end()) break;
      labelled_.insert(*missing);
      roots_.clear();
      for (const Term& s : subjects_) {
        if (is_root(s)) roots_.push_back(s);
      }
    }
  }

  void visit(const Term& node, std::set<Term>& seen) {
    if (!seen.insert(node).second) return;
    auto it = by_subject_.find(node);
    if (it == by_subject_.end()) return;
    for (const Triple* t : it->second) {
      if (t->object.is_blank() && !labelled_.count(t->object))
        visit(t->object, seen);
    }
  }

  std::string iri(const std::string& value) const {
    for (const auto& [prefix, ns] : prefixes_) {
      if (value.size() > ns.size() && value.compare(0, ns.size(), ns) == 0) {
        std::string_view local(value.data() + ns.size(), value.size() - ns.size());
        if (valid_local(local)) return prefix + ":" + std::string(local);
      }
    }
    return "<" + value + ">";
  }

  std::string term(const Term& t) const {
    if (options_.render) {
      if (auto custom = options_.render(t)) return *custom;
    }
    switch (t.kind) {
      case TermKind::iri: return iri(t.value);
      case TermKind::blank: return "_:" + t.value;
      case TermKind::variable: return "?" + t.value;
      case TermKind::literal:
        if (t.datatype == vocab::xsd_integer && is_integer_lexical(t.value))
          return t.value;
        {
          std::string out = "\"" + escape_string(t.value) + "\"";
          if (!t.language.empty()) out += "@" + t.language;
          if (!t.datatype.empty()) out += "^^" + iri(t.datatype);
          return out;
        }
    }
    return t.value;
  }

  std::string predicate(const Term& p) const {
    if (p.is_iri() && p.value == vocab::rdf_type) return "a";
    return term(p);
  }

  // Items of a well-formed list starting at `node`, or nothing.
  std::optional<std::vector<Term>> list_items(const Term& node) const {
    std::vector<Term> items;
    Term cur = node;
    std::set<Term> seen;
    while (!(cur.is_iri() && cur.value == vocab::rdf_nil)) {
      if (!cur.is_blank() || labelled_.count(cur) || !seen.insert(cur).second)
        return std::nullopt;
      auto it = by_subject_.find(cur);
      if (it == by_subject_.end() || it->second.size() != 2) return std::nullopt;
      const Triple* first = nullptr;
      const Triple* rest = nullptr;
      for (const Triple* t : it->second) {
        if (t->predicate.value == vocab::rdf_first) first = t;
        if (t->predicate.value == vocab::rdf_rest) rest = t;
      }
      if (!first || !rest) return std::nullopt;
      auto rc = refcount_.find(cur);
      if (rc == refcount_.end() || rc->second != 1) return std::nullopt;
      items.push_back(first->object);
      cur = rest->object;
    }
    return items;
  }

  std::string object(const Term& o) const {
    if (!o.is_blank() || labelled_.count(o)) return term(o);
    if (auto items = list_items(o)) {
      std::string out = "(";
      for (std::size_t i = 0; i < items->size(); ++i) {
        if (i) out += " ";
        out += object((*items)[i]);
      }
      return out + ")";
    }
    auto it = by_subject_.find(o);
    if (it == by_subject_.end()) return "[]";
    return bracket(property_list(it->second));
  }

  std::string bracket(const std::string& body) const {
    return options_.compact ? "[" + body + "]" : "[ " + body + " ]";
  }

  std::string property_list(const std::vector<const Triple*>& triples) const {
    std::vector<Term> order;
    std::map<Term, std::vector<const Term*>> objects;
    for (const Triple* t : triples) {
      if (!objects.count(t->predicate)) order.push_back(t->predicate);
      objects[t->predicate].push_back(&t->object);
    }
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i) out += "; ";
      out += predicate(order[i]) + " ";
      const auto& objs = objects[order[i]];
      for (std::size_t j = 0; j < objs.size(); ++j) {
        if (j) out += ", ";
        out += object(*objs[j]);
      }
    }
    return out;
  }

  bool is_outer(const Term& p) const {
    return p.is_iri() &&
           std::find(options_.outer_predicates.begin(),
                     options_.outer_predicates.end(),
                     p.value) != options_.outer_predicates.end();
  }

  std::string statement(const Term& subject) const {
    const auto& triples = by_subject_.at(subject);
    if (subject.is_blank() && !labelled_.count(subject)) {
      std::vector<const Triple*> inner;
      std::vector<const Triple*> outer;
      for (const Triple* t : triples) {
        (is_outer(t->predicate) ? outer : inner).push_back(t);
      }
      std::string head = inner.empty() ? "[]" : bracket(property_list(inner));
      if (outer.empty()) return head;
      return head + " " + property_list(outer);
    }
    return term(subject) + " " + property_list(triples);
  }

  const Graph& graph_;
  const WriterOptions& options_;
  PrefixMap prefixes_;
  std::vector<Term> subjects_;
  std::map<Term, std::vector<const Triple*>> by_subject_;
  std::map<Term, std::size_t> refcount_;
  std::set<Term> labelled_;
  std::vector<Term> roots_;
};

}  // namespace

std::string write_statements(const Graph& graph, const WriterOptions& options) {
  return Writer(graph, options).run();
}

std::string serialize_turtle(const Graph& graph) {
  std::string out;
  PrefixMap all = builtin_prefixes();
  for (const auto& p : graph.prefixes()) {
    auto it = std::find_if(all.begin(), all.end(),
                           [&](const auto& e) { return e.first == p.first; });
    if (it != all.end()) {
      it->second = p.second;
    } else {
      all.push_back(p);
    }
  }
  for (const auto& [prefix, ns] : all) {
    out += "@prefix " + prefix + ": <" + ns + "> .\n";
  }
  if (graph.empty()) return out;
  out += "\n";
  out += write_statements(graph, WriterOptions{});
  return out;
}

}  // namespace cqgen::rdf
