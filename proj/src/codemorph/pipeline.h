// Copyright 2026 The Codemorph Authors
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


#ifndef CODEMORPH_PIPELINE_H_
#define CODEMORPH_PIPELINE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "codemorph/corpus.h"
#include "codemorph/interp.h"
#include "codemorph/metrics.h"

namespace codemorph {

// Command-level operations. Each one is a pure function of its inputs and
// writes its artifacts atomically, so repeated runs are byte-identical.

// One CSV row per entry: method id, statement count, site count per kind.
std::string RenderSitesTable(const CorpusManifest& corpus);

struct SelfCheckResult {
  int64_t variants = 0;
  int64_t equivalent = 0;
  int64_t divergent = 0;
  int64_t not_checkable = 0;
  std::vector<std::string> divergences;  // one line per divergent variant
  std::vector<std::string> diagnostics;
};

// Generates the variants |options| describes and checks each against its
// original with |trials| input vectors.
SelfCheckResult SelfCheck(const CorpusManifest& corpus,
                          const EmitOptions& options, int trials);

std::string SerializePairs(const std::vector<PredictionPair>& pairs);
std::vector<PredictionPair> ParsePairs(const std::string& text);

// Writes the report tables and report.md into |out_dir|.
void WriteReport(const MetricsReport& report, const std::string& out_dir);

struct EvaluateOptions {
  std::string manifest_path;
  std::string corpus_dir;  // defaults to the manifest's directory
  std::string pred_original;
  std::string pred_variants;
  std::string out_dir;
  std::vector<int> bucket_edges = kDefaultBucketEdges;
};

struct EvaluateResult {
  JoinResult join;
  MetricsReport report;
};

// Joins predictions, then writes pairs.jsonl, missing.jsonl and the report.
// Throws EmptyInput when no pair survives the join.
EvaluateResult Evaluate(const EvaluateOptions& options);

// Re-renders a report from a pairs.jsonl written by Evaluate.
MetricsReport Report(const std::string& pairs_path, const std::string& out_dir,
                     const std::vector<int>& edges = kDefaultBucketEdges);

struct BaselineResult {
  int64_t originals = 0;
  int64_t variants = 0;
};

// Runs BaselinePredict over every original and variant of a manifest and
// writes pred_original.jsonl and pred_variants.jsonl into |out_dir|.
BaselineResult RunBaseline(const std::string& manifest_path,
                           const std::string& out_dir);

}  // namespace codemorph

#endif  // CODEMORPH_PIPELINE_H_
