#!/usr/bin/env python3
# Copyright 2026 The cqgen Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Brute-force recount of dataset statistics straight from a dataset file.
# Shares no code with the library; used as the test oracle for `stats`.
#
# usage: recount_stats.py DATASET.jsonl  (prints a JSON document)

import json
import re
import sys

QUESTION_TYPES = ["ASK", "SELECT_LHS", "SELECT_RHS", "SELECT_VERB",
                  "COUNT_LHS", "COUNT_RHS", "COUNT_VERB"]

CONSTRUCTS = [
    "owl:Restriction", "owl:onProperty", "owl:intersectionOf",
    "rdfs:subClassOf", "owl:equivalentClass", "owl:someValuesFrom",
    "owl:qualifiedCardinality", "owl:hasValue", "owl:unionOf",
    "owl:allValuesFrom", "owl:maxQualifiedCardinality", "owl:complementOf",
    "owl:minCardinality", "owl:onClass", "owl:onDataRange",
]


def norm(s):
    return " ".join(s.split())


def main(path):
    cq_to_queries = {}
    query_to_cqs = {}
    cq_types = {}
    query_types = {}
    pairs = 0
    with open(path, encoding="utf-8") as f:
        for n, line in enumerate(f, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            rec = json.loads(line)
            qt = rec["question_type"]
            q = norm(rec["query_template"])
            query_to_cqs.setdefault(q, set())
            query_types.setdefault(qt, set()).add(q)
            if rec.get("record") == "query":
                continue
            pairs += 1
            c = norm(rec["cq_template"])
            cq_to_queries.setdefault(c, set()).add(q)
            query_to_cqs[q].add(c)
            cq_types.setdefault(c, set()).add(qt)

    n_cq = len(cq_to_queries)
    n_q = len(query_to_cqs)
    hist = {qt: 0 for qt in QUESTION_TYPES}
    for c, types in cq_types.items():
        for qt in types:
            hist[qt] += 1
    qhist = {qt: len(query_types.get(qt, ())) for qt in QUESTION_TYPES}

    constructs = {}
    for name in CONSTRUCTS:
        pat = re.compile(r"(?<![A-Za-z0-9_:])" + re.escape(name) + r"(?![A-Za-z0-9_])")
        k = sum(1 for q in query_to_cqs if pat.search(q))
        constructs[name] = {"templates": k, "total": n_q}

    out = {
        "pairs": pairs,
        "distinct_cq_templates": n_cq,
        "distinct_query_templates": n_q,
        "avg_cq_per_query_bucket_mean":
            sum(len(v) for v in query_to_cqs.values()) / n_q if n_q else 0.0,
        "avg_query_per_cq":
            sum(len(v) for v in cq_to_queries.values()) / n_cq if n_cq else 0.0,
        "ratio_global": n_cq / n_q if n_q else 0.0,
        "question_type_histogram": hist,
        "query_type_histogram": qhist,
        "cq_texts_in_multiple_types": sum(1 for t in cq_types.values() if len(t) > 1),
        "construct_counts": constructs,
    }
    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    if len(sys.argv) != 2:
        sys.exit("usage: recount_stats.py DATASET")
    main(sys.argv[1])
