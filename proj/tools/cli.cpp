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

#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cqgen/coverage.hpp"
#include "cqgen/cq_gen.hpp"
#include "cqgen/dataset.hpp"
#include "cqgen/errors.hpp"
#include "cqgen/materializer.hpp"
#include "cqgen/pipeline.hpp"
#include "cqgen/text.hpp"

namespace cqgen::cli {

namespace {

void write_text(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
  if (!f) throw Error("write to '" + path + "' failed");
}

// Writes to `path`, or to `fallback` when no path was given.
void emit(const std::string& path, const std::string& content, std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
  } else {
    write_text(path, content);
  }
}

// Adds the file name to parse errors raised while reading `path`.
template <class F>
auto in_file(const std::string& path, F f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.detail() + " (in " + path + ")", e.line(), e.column());
  }
}

int generate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const std::string rules_doc = text::read_file(c.rules);
  const std::string synonyms_doc = text::read_file(c.synonyms);
  const auto rules = in_file(c.rules, [&] { return parse_rules(rules_doc); });
  const auto synonyms = in_file(c.synonyms, [&] { return parse_synonyms(synonyms_doc); });
  in_file(c.rules, [&] { check_markers(rules, synonyms); });

  ShapeCorpus corpus = load_shape_corpus(c.shapes);
  DatasetMeta meta;
  meta.rules_digest = text::hex_digest(rules_doc);
  meta.synonyms_digest = text::hex_digest(synonyms_doc);
  meta.manifest_digest = corpus.manifest_digest;
  GenerateResult result = generate_dataset(
      corpus.shapes, rules, synonyms,
      c.compat_count ? CountSyntax::compat : CountSyntax::standard, meta);

  std::ostringstream dataset;
  write_dataset(result.dataset, dataset);
  emit(c.out, dataset.str(), out);

  std::vector<SkipRecord> skipped = corpus.skipped;
  skipped.insert(skipped.end(), result.skipped.begin(), result.skipped.end());
  std::string report = skip_report(skipped);
  report += "warnings: " + std::to_string(result.warnings.size()) + "\n";
  for (const auto& w : result.warnings) report += w + "\n";
  if (!c.report.empty()) write_text(c.report, report);

  err << "generated " << result.dataset.pairs.size() << " pairs from "
      << result.verbalizations.size() << " shapes; skipped " << skipped.size() << "\n";
  return kOk;
}

int materialize(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Dataset d = in_file(c.dataset, [&] { return read_dataset(c.dataset); });
  const Vocabulary vocab = in_file(c.ontology, [&] {
    return extract_vocabulary(rdf::parse_turtle(text::read_file(c.ontology)));
  });
  const VerbExceptions verbs =
      c.verbs.empty() ? default_verb_exceptions()
                      : in_file(c.verbs, [&] { return parse_verb_exceptions(text::read_file(c.verbs)); });
  const MaterializeResult result = materialize_dataset(d, vocab, c.limit, c.seed, verbs);
  std::string lines;
  for (const auto& m : result.pairs) lines += to_json_line(m) + "\n";
  emit(c.out, lines, out);

  std::string report = "materialized: " + std::to_string(result.pairs.size()) +
                       "\nskipped pairs: " + std::to_string(result.skipped.size()) +
                       "\nunrecognized resources: " + std::to_string(vocab.skipped) + "\n";
  for (const auto& [id, why] : result.skipped) report += id + "\t" + why + "\n";
  if (!c.report.empty()) write_text(c.report, report);
  err << "materialized " << result.pairs.size() << " pairs; skipped "
      << result.skipped.size() << "\n";
  return kOk;
}

int stats(const RunConfig& c, std::ostream& out, std::ostream&) {
  const StatsReport s =
      compute_stats(in_file(c.dataset, [&] { return read_dataset(c.dataset); }));
  emit(c.out, stats_to_json(s), out);
  if (!c.markdown.empty()) write_text(c.markdown, stats_to_markdown(s));
  return kOk;
}

int coverage(const RunConfig& c, std::ostream& out, std::ostream&) {
  const Dataset d = in_file(c.dataset, [&] { return read_dataset(c.dataset); });
  const auto queries = c.queries.empty() ? std::vector<std::string>{} : load_queries(c.queries);
  const auto cqs = c.cqs.empty() ? std::vector<std::string>{} : load_cqs(c.cqs);
  const CoverageReport r = coverage_report(d, queries, cqs);
  if (!c.report.empty()) write_text(c.report, coverage_to_json(r));
  out << coverage_summary(r);
  return kOk;
}

int verbalize_cmd(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ShapeCorpus corpus = load_shape_corpus(c.shapes);
  std::string lines;
  for (const auto& s : corpus.shapes) lines += debug_line(verbalize(s)) + "\n";
  emit(c.out, lines, out);
  if (!corpus.skipped.empty()) err << skip_report(corpus.skipped);
  return kOk;
}

}  // namespace

Parsed parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Competency question and SPARQL-OWL template generator", "cqgen"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "shapes + rules + synonyms -> dataset");
  gen->add_option("--shapes", c.shapes, "Directory of .ttl axiom shapes")->required();
  gen->add_option("--rules", c.rules, "Transformation rules file")->required();
  gen->add_option("--synonyms", c.synonyms, "Synonym sets file")->required();
  gen->add_option("--out", c.out, "Dataset file (default: stdout)");
  gen->add_option("--report", c.report, "Skip report file");
  gen->add_flag("--compat-count", c.compat_count,
                "Emit SELECT COUNT(?x) instead of SELECT (COUNT(?x) AS ?n)");

  auto* mat = app.add_subcommand("materialize", "dataset + ontology -> concrete pairs");
  mat->add_option("--dataset", c.dataset, "Dataset file")->required();
  mat->add_option("--ontology", c.ontology, "Ontology .ttl file")->required();
  mat->add_option("--out", c.out, "Output file (default: stdout)");
  mat->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
  mat->add_option("--limit", c.limit, "Assignments per pair")->capture_default_str();
  mat->add_option("--verbs", c.verbs, "Irregular verbs file (base -> 3sg)");
  mat->add_option("--report", c.report, "Report file");

  auto* st = app.add_subcommand("stats", "dataset statistics");
  st->add_option("--dataset", c.dataset, "Dataset file")->required();
  st->add_option("--out", c.out, "JSON output (default: stdout)");
  st->add_option("--markdown", c.markdown, "Markdown tables output");

  auto* cov = app.add_subcommand("coverage", "coverage of external queries and CQs");
  cov->add_option("--dataset", c.dataset, "Dataset file")->required();
  cov->add_option("--queries", c.queries, "Query file or directory of .rq files");
  cov->add_option("--cqs", c.cqs, "CQ file, one question per line");
  cov->add_option("--report", c.report, "JSON report file");

  auto* verb = app.add_subcommand("verbalize", "debug listing of shape verbalizations");
  verb->add_option("--shapes", c.shapes, "Directory of .ttl axiom shapes")->required();
  verb->add_option("--out", c.out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    Parsed p;
    p.exit_code = app.exit(e, out, err) == 0 ? kOk : kUsage;
    return p;
  }
  if (gen->parsed()) c.command = Command::generate;
  if (mat->parsed()) c.command = Command::materialize;
  if (st->parsed()) c.command = Command::stats;
  if (cov->parsed()) c.command = Command::coverage;
  if (verb->parsed()) c.command = Command::verbalize;
  return {c, kOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::generate: return generate(config, out, err);
      case Command::materialize: return materialize(config, out, err);
      case Command::stats: return stats(config, out, err);
      case Command::coverage: return coverage(config, out, err);
      case Command::verbalize: return verbalize_cmd(config, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  } catch (const PreconditionError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsage;
}

}  // namespace cqgen::cli
