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


#ifndef CODEMORPH_CORPUS_H_
#define CODEMORPH_CORPUS_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "codemorph/ast.h"
#include "codemorph/metrics.h"
#include "codemorph/transform.h"
#include "codemorph/transform_kind.h"

namespace codemorph {

struct CorpusEntry {
  std::string method_id;    // "<relpath>#<k>:<name>", or the JSONL row id
  std::string source_path;  // file or JSONL the method came from
  std::string name;         // declared name; the ground truth
  int statement_count = 0;
  std::array<int, 6> site_counts{};  // indexed by TransformKind
  MethodAst ast;

  int sites(TransformKind kind) const {
    return site_counts[static_cast<size_t>(kind)];
  }
};

struct CorpusManifest {
  std::string label;
  std::vector<CorpusEntry> entries;  // sorted by method_id
  std::vector<std::string> diagnostics;
};

// Reads a directory tree of .java files, a single .java file, or a JSON-Lines
// file of {"id", "source"} rows. Methods outside the subset are skipped with
// a diagnostic. Throws IoError or EmptyCorpus.
CorpusManifest Ingest(const std::string& path);

// Builds a manifest from in-memory methods, ids assigned as "<label>#<k>".
CorpusManifest ManifestFromMethods(const std::string& label,
                                   const std::vector<MethodAst>& methods);

// Entries with at least |k| sites of |kind|.
CorpusManifest FilterMinSites(const CorpusManifest& manifest,
                              TransformKind kind, int k = 4);

struct VariantRow {
  std::string method_id;
  std::string variant_id;
  TransformKind kind = TransformKind::kVariableRenaming;
  Mode mode = Mode::kSinglePlace;
  int percent = 0;
  uint64_t seed = 0;
  int sites_applied = 0;
  std::string path;  // relative to the output directory

  bool operator==(const VariantRow&) const = default;
};

struct VariantManifest {
  std::vector<VariantRow> rows;  // sorted by variant_id
};

struct EmitOptions {
  std::vector<TransformKind> kinds;  // kinds that reject |mode| are skipped
  Mode mode = Mode::kSinglePlace;
  int percent = 0;
  uint64_t seed = 0;
  int repeat = 5;  // percent mode runs seeds seed+1 .. seed+repeat
  // Entries with fewer sites of a kind are not transformed for it. Unset
  // means 4 in percent mode and no filter otherwise.
  std::optional<int> min_sites;
  int jobs = 1;
};

struct EmitResult {
  VariantManifest manifest;
  std::vector<std::string> diagnostics;
};

// The variants of one entry under |options|, in generation order.
std::vector<Variant> GenerateVariants(const CorpusEntry& entry,
                                      const EmitOptions& options);

// Writes originals/, variants/, corpus.jsonl and manifest.jsonl under
// |out_dir|. Every file is written atomically. Throws IoError.
EmitResult EmitVariants(const CorpusManifest& corpus,
                        const EmitOptions& options,
                        const std::string& out_dir);

// Path of an entry's canonical source under an output directory.
std::string OriginalPath(const std::string& method_id);

// JSON-Lines persistence. The corpus form keeps everything but the AST,
// which LoadCorpusManifest recovers by parsing the stored original.
std::string SerializeManifest(const VariantManifest& manifest);
VariantManifest ParseManifest(const std::string& text);
VariantManifest LoadManifest(const std::string& path);
std::string SerializeCorpus(const CorpusManifest& corpus);
CorpusManifest LoadCorpusManifest(const std::string& out_dir);

struct PredictionFile {
  std::map<std::string, std::string> predictions;
  std::vector<std::string> warnings;
};

// Reads {"id", "prediction"} rows. Duplicate ids keep the last row.
PredictionFile LoadPredictions(const std::string& path);
PredictionFile ParsePredictions(const std::string& text,
                                const std::string& origin);

struct MissingPrediction {
  std::string variant_id;
  std::string reason;
};

struct JoinResult {
  std::vector<PredictionPair> pairs;  // manifest order
  std::vector<MissingPrediction> missing;
  std::vector<std::string> warnings;
};

// Label used to group pairs in reports: "single", "all", "percent25", ...
std::string ModeLabel(Mode mode, int percent);

// One pair per manifest row with both predictions; the rest are listed in
// |missing|, so pairs + missing = rows.
JoinResult JoinPredictions(const VariantManifest& variants,
                           const CorpusManifest& corpus,
                           const PredictionFile& original,
                           const PredictionFile& variant);

// Stand-in model: the two most frequent identifier subtokens of the body,
// joined in camelCase, ties broken lexicographically; "unknown" when the
// body has no identifiers.
std::string BaselinePredict(const MethodAst& method);

// File helpers shared with the pipeline.
std::string ReadFile(const std::string& path);
void WriteFileAtomic(const std::string& path, const std::string& content);

}  // namespace codemorph

#endif  // CODEMORPH_CORPUS_H_
