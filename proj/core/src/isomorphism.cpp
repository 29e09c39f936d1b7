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
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cqgen/rdf.hpp"

namespace cqgen::rdf {
namespace {

using Colouring = std::map<std::string, std::size_t>;

std::vector<std::string> blank_labels(const Graph& g) {
  std::set<std::string> labels;
  for (const auto& t : g.triples()) {
    if (t.subject.is_blank()) labels.insert(t.subject.value);
    if (t.object.is_blank()) labels.insert(t.object.value);
  }
  return {labels.begin(), labels.end()};
}

// Weisfeiler-Lehman style refinement. Colours are strings so that the two
// graphs are refined with a shared vocabulary.
std::map<std::string, std::string> refine(const Graph& g, int rounds) {
  std::map<std::string, std::string> colour;
  for (const auto& label : blank_labels(g)) colour[label] = "b";
  auto show = [&](const Term& t) {
    return t.is_blank() ? "{" + colour[t.value] + "}" : t.to_string();
  };
  for (int r = 0; r < rounds; ++r) {
    std::map<std::string, std::vector<std::string>> sig;
    for (const auto& t : g.triples()) {
      if (t.subject.is_blank())
        sig[t.subject.value].push_back(">" + t.predicate.to_string() + show(t.object));
      if (t.object.is_blank())
        sig[t.object.value].push_back("<" + t.predicate.to_string() + show(t.subject));
    }
    std::map<std::string, std::string> next;
    for (auto& [label, parts] : sig) {
      std::sort(parts.begin(), parts.end());
      std::string joined = colour[label] + "|";
      for (const auto& p : parts) joined += p + ";";
      next[label] = std::to_string(std::hash<std::string>{}(joined));
    }
    colour = std::move(next);
  }
  return colour;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  auto la = blank_labels(a);
  auto lb = blank_labels(b);
  if (la.size() != lb.size()) return false;

  // Ground triples must agree exactly.
  std::multiset<Triple> ground_a, ground_b;
  for (const auto& t : a.triples()) {
    if (!t.subject.is_blank() && !t.object.is_blank()) ground_a.insert(t);
  }
  for (const auto& t : b.triples()) {
    if (!t.subject.is_blank() && !t.object.is_blank()) ground_b.insert(t);
  }
  if (ground_a != ground_b) return false;
  if (la.empty()) return true;

  int rounds = static_cast<int>(std::min<std::size_t>(la.size(), 8)) + 1;
  auto ca = refine(a, rounds);
  auto cb = refine(b, rounds);
  std::multiset<std::string> ma, mb;
  for (const auto& [_, c] : ca) ma.insert(c);
  for (const auto& [_, c] : cb) mb.insert(c);
  if (ma != mb) return false;

  std::map<std::string, std::string> mapping;
  std::set<std::string> used;
  auto check = [&]() {
    for (const auto& t : a.triples()) {
      Triple m = t;
      if (m.subject.is_blank()) m.subject.value = mapping.at(m.subject.value);
      if (m.object.is_blank()) m.object.value = mapping.at(m.object.value);
      if (!b.contains(m)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == la.size()) return check();
    const std::string& from = la[i];
    for (const auto& to : lb) {
      if (used.count(to) || ca[from] != cb[to]) continue;
      mapping[from] = to;
      used.insert(to);
      if (search(i + 1)) return true;
      used.erase(to);
    }
    mapping.erase(from);
    return false;
  };
  return search(0);
}

}  // namespace cqgen::rdf
