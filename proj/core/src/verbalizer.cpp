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

#include "cqgen/verbalizer.hpp"

#include <string>
#include <vector>

#include "cqgen/errors.hpp"

namespace cqgen {

const char* to_string(RelationClass rc) noexcept {
  return rc == RelationClass::SPO ? "SPO" : "SS";
}

std::optional<RelationClass> relation_class_from_string(std::string_view s) {
  if (s == "SPO") return RelationClass::SPO;
  if (s == "SS") return RelationClass::SS;
  return std::nullopt;
}

namespace {

constexpr std::string_view kSomething = "something that ";

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string literal_text(const rdf::Term& t) { return "\"" + t.value + "\""; }

std::string restriction_object(const Restriction& r);

std::string verb_phrase(const Restriction& r) {
  std::string object = restriction_object(r);
  return object.empty() ? r.property.slot() : r.property.slot() + " " + object;
}

// Filler rendered after a cardinality: no article.
std::string counted(const Filler& filler) {
  if (const auto* id = std::get_if<PlaceholderId>(&filler)) return id->slot();
  if (const auto* box = std::get_if<Box<ClassExpression>>(&filler)) {
    return noun_phrase(**box, false);
  }
  return "things";
}

std::string restriction_object(const Restriction& r) {
  const std::string n = std::to_string(r.cardinality);
  switch (r.constraint) {
    case ConstraintKind::some_values_from:
    case ConstraintKind::all_values_from: {
      std::string prefix =
          r.constraint == ConstraintKind::all_values_from ? "only " : "";
      if (const auto* id = std::get_if<PlaceholderId>(&r.filler)) {
        return prefix + id->slot();
      }
      return prefix + noun_phrase(*std::get<Box<ClassExpression>>(r.filler), true);
    }
    case ConstraintKind::has_value:
      if (const auto* id = std::get_if<PlaceholderId>(&r.filler)) return id->slot();
      if (const auto* lit = std::get_if<rdf::Term>(&r.filler)) return literal_text(*lit);
      return noun_phrase(*std::get<Box<ClassExpression>>(r.filler), false);
    case ConstraintKind::qualified_cardinality:
      return "exactly " + n + " " + counted(r.filler);
    case ConstraintKind::max_qualified_cardinality:
      return "at most " + n + " " + counted(r.filler);
    case ConstraintKind::min_cardinality:
      return "at least " + n + " things";
  }
  return {};
}

PlaceholderId top_property(const ClassExpression& rhs) {
  return rhs.restriction()->property;
}

std::optional<PlaceholderId> named_filler(const Restriction& r) {
  if (r.constraint == ConstraintKind::min_cardinality) return std::nullopt;
  if (const auto* box = std::get_if<Box<ClassExpression>>(&r.filler)) {
    if (const auto* n = (*box)->named()) return n->id;
  }
  return std::nullopt;
}

std::string sentence(const std::string& lhs_text, const std::string& verb,
                     const std::string& rhs) {
  std::string subject;
  if (lhs_text.compare(0, kSomething.size(), kSomething) == 0) {
    subject = "Everything that " + lhs_text.substr(kSomething.size());
  } else {
    subject = "Every " + lhs_text;
  }
  return subject + " " + verb + " " + rhs;
}

}  // namespace

std::string noun_phrase(const ClassExpression& expr, bool object_position) {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NamedClass>) {
          return object_position ? "a " + node.id.slot() : node.id.slot();
        } else if constexpr (std::is_same_v<T, Restriction>) {
          return std::string(kSomething) + verb_phrase(node);
        } else if constexpr (std::is_same_v<T, Intersection>) {
          const auto& ops = node.operands;
          bool rest_restrictions = true;
          for (std::size_t i = 1; i < ops.size(); ++i) {
            rest_restrictions &= ops[i].is_restriction();
          }
          std::vector<std::string> vps;
          if (rest_restrictions) {
            for (std::size_t i = 1; i < ops.size(); ++i) {
              vps.push_back(verb_phrase(*ops[i].restriction()));
            }
            if (ops[0].is_restriction()) {
              vps.insert(vps.begin(), verb_phrase(*ops[0].restriction()));
              return std::string(kSomething) + join(vps, " and ");
            }
            return noun_phrase(ops[0], object_position) + " that " + join(vps, " and ");
          }
          std::vector<std::string> nps;
          for (const auto& op : ops) nps.push_back(noun_phrase(op, object_position));
          return join(nps, " and ");
        } else if constexpr (std::is_same_v<T, Union>) {
          std::vector<std::string> nps;
          for (const auto& op : node.operands) nps.push_back(noun_phrase(op, object_position));
          return join(nps, " or ");
        } else {
          return "not " + noun_phrase(*node.operand, object_position);
        }
      },
      expr.node);
}

Verbalization verbalize(const AxiomShape& shape) {
  Verbalization v;
  v.shape_id = shape.id;
  v.axiom_kind = shape.kind;
  Segmentation& seg = v.segmentation;
  seg.lhs_text = noun_phrase(shape.lhs, false);
  seg.lhs_is_named = shape.lhs.is_named();
  if (const auto* r = shape.rhs.restriction()) {
    seg.verb_is_property = true;
    seg.verb_property = top_property(shape.rhs);
    seg.verb_text = r->property.slot();
    seg.rhs_text = restriction_object(*r);
    seg.rhs_target = named_filler(*r);
    seg.rhs_target_is_named = seg.rhs_target.has_value();
    v.relation_class = RelationClass::SPO;
  } else {
    seg.verb_text = "is";
    seg.rhs_text = noun_phrase(shape.rhs, true);
    if (const auto* n = shape.rhs.named()) seg.rhs_target = n->id;
    seg.rhs_target_is_named = seg.rhs_target.has_value();
    v.relation_class = RelationClass::SS;
  }
  v.text = sentence(seg.lhs_text, seg.verb_text, seg.rhs_text);
  return v;
}

Verbalization spo_to_ss(const Verbalization& v) {
  if (v.relation_class != RelationClass::SPO) {
    throw PreconditionError("spo_to_ss: verbalization of '" + v.shape_id +
                            "' is already SS");
  }
  Verbalization out = v;
  Segmentation& seg = out.segmentation;
  const std::string tail = " " + v.segmentation.verb_text + " " + v.segmentation.rhs_text;
  std::string frame = v.text;
  if (frame.size() >= tail.size() &&
      frame.compare(frame.size() - tail.size(), tail.size(), tail) == 0) {
    frame.resize(frame.size() - tail.size());
  } else {
    throw InvariantError("verbalization text does not end with its VERB/RHS segments");
  }
  seg.rhs_text = std::string(kSomething) + v.segmentation.verb_text +
                 (v.segmentation.rhs_text.empty() ? "" : " " + v.segmentation.rhs_text);
  seg.verb_text = "is";
  seg.verb_is_property = false;
  seg.verb_property.reset();
  seg.rhs_target_is_named = false;
  seg.rhs_target.reset();
  out.relation_class = RelationClass::SS;
  out.text = frame + " is " + seg.rhs_text;
  return out;
}

RelationClass classify_relation(const Verbalization& v) {
  return v.segmentation.verb_is_property ? RelationClass::SPO : RelationClass::SS;
}

std::string debug_line(const Verbalization& v) {
  return v.shape_id + "\t" + v.text + "\t" + to_string(v.relation_class);
}

}  // namespace cqgen
