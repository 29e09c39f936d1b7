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

#include "cqgen/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

#include "cqgen/errors.hpp"
#include "cqgen/text.hpp"

namespace cqgen {

namespace fs = std::filesystem;

std::vector<std::string> list_shape_files(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error("shape directory '" + dir + "' not found");
  std::vector<std::string> out;
  const fs::path manifest = fs::path(dir) / "manifest.txt";
  if (fs::exists(manifest)) {
    const std::string doc = text::read_file(manifest.string());
    std::size_t pos = 0;
    while (pos <= doc.size()) {
      std::size_t end = doc.find('\n', pos);
      if (end == std::string::npos) end = doc.size();
      const std::string line = text::normalize_whitespace(doc.substr(pos, end - pos));
      pos = end + 1;
      if (line.empty() || line[0] == '#') continue;
      out.push_back((fs::path(dir) / line).string());
    }
    return out;
  }
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".ttl") out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ShapeCorpus load_shape_corpus(const std::string& dir) {
  ShapeCorpus corpus;
  std::string digest_input;
  std::set<std::string> ids;
  for (const auto& path : list_shape_files(dir)) {
    const std::string id = fs::path(path).stem().string();
    if (!ids.insert(id).second) {
      corpus.skipped.push_back({id, "parse", "duplicate-id", "shape id listed twice"});
      continue;
    }
    try {
      const std::string doc = text::read_file(path);
      digest_input += id + '\x1f' + doc + '\x1e';
      corpus.shapes.push_back(extract_axiom_shape(rdf::parse_turtle(doc), id));
    } catch (const ParseError& e) {
      corpus.skipped.push_back({id, "parse", to_string(e.kind()), e.what()});
    } catch (const ShapeError& e) {
      corpus.skipped.push_back({id, "shape", to_string(e.kind()), e.what()});
    } catch (const Error& e) {
      corpus.skipped.push_back({id, "parse", "io", e.what()});
    }
  }
  corpus.manifest_digest = text::hex_digest(digest_input);
  return corpus;
}

GenerateResult generate_dataset(const std::vector<AxiomShape>& shapes,
                                const std::vector<TransformationRule>& rules,
                                const SynonymTable& synonyms, CountSyntax count_syntax,
                                DatasetMeta meta) {
  GenerateResult result;
  std::vector<CQTemplate> cqs;
  std::vector<QueryTemplate> queries;
  for (const auto& shape : shapes) {
    try {
      Verbalization v = verbalize(shape);
      std::vector<QueryTemplate> shape_queries = generate_query_templates(shape, count_syntax);
      std::vector<CQTemplate> shape_cqs;
      for (const auto& q : shape_queries) {
        RuleApplication applied = apply_rules(v, q.question_type, rules);
        for (auto& w : applied.warnings) result.warnings.push_back(std::move(w));
        for (const auto& t : applied.templates) {
          for (auto& e : expand_synonyms(t, synonyms)) shape_cqs.push_back(std::move(e));
        }
      }
      queries.insert(queries.end(), shape_queries.begin(), shape_queries.end());
      cqs.insert(cqs.end(), shape_cqs.begin(), shape_cqs.end());
      result.verbalizations.push_back(std::move(v));
    } catch (const Error& e) {
      result.skipped.push_back({shape.id, "generate", "error", e.what()});
    }
  }
  meta.compat_count = count_syntax == CountSyntax::compat;
  result.dataset = build_pairs(cqs, queries, std::move(meta));
  return result;
}

std::string skip_report(const std::vector<SkipRecord>& skipped) {
  std::map<std::pair<std::string, std::string>, std::size_t> tally;
  for (const auto& s : skipped) ++tally[{s.stage, s.kind}];
  std::string out = "skipped shapes: " + std::to_string(skipped.size()) + "\n";
  for (const auto& [key, n] : tally) {
    out += "  " + key.first + "/" + key.second + ": " + std::to_string(n) + "\n";
  }
  for (const auto& s : skipped) {
    out += s.shape_id + "\t" + s.stage + "\t" + s.kind + "\t" + s.message + "\n";
  }
  return out;
}

}  // namespace cqgen
