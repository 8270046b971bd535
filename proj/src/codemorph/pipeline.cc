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


#include "codemorph/pipeline.h"

#include <filesystem>
#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "codemorph/errors.h"
#include "codemorph/parallel.h"
#include "codemorph/parser.h"

namespace codemorph {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string JoinValues(const std::vector<Value>& values) {
  std::string out = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].ToString();
  }
  return out + ")";
}

}  // namespace

std::string RenderSitesTable(const CorpusManifest& corpus) {
  std::string out = "method_id,statements";
  for (TransformKind kind : kAllTransformKinds) {
    out += ",";
    out += ToString(kind);
  }
  out += "\n";
  for (const CorpusEntry& e : corpus.entries) {
    out += e.method_id + "," + std::to_string(e.statement_count);
    for (TransformKind kind : kAllTransformKinds) {
      out += "," + std::to_string(e.sites(kind));
    }
    out += "\n";
  }
  return out;
}

SelfCheckResult SelfCheck(const CorpusManifest& corpus,
                          const EmitOptions& options, int trials) {
  if (trials < 1) throw InvalidArgument("--trials must be at least 1");
  const size_t n = corpus.entries.size();
  std::vector<SelfCheckResult> parts(n);
  ParallelFor(n, options.jobs, [&](size_t i) {
    const CorpusEntry& entry = corpus.entries[i];
    SelfCheckResult& part = parts[i];
    std::vector<Variant> variants;
    try {
      variants = GenerateVariants(entry, options);
    } catch (const Error& e) {
      part.diagnostics.push_back(entry.method_id + ": " + e.what());
      return;
    }
    for (const Variant& v : variants) {
      ++part.variants;
      const EquivalenceVerdict verdict =
          CheckEquivalence(entry.ast, v.ast, trials, options.seed);
      switch (verdict.status) {
        case VerdictStatus::kEquivalent:
          ++part.equivalent;
          break;
        case VerdictStatus::kNotCheckable:
          ++part.not_checkable;
          break;
        case VerdictStatus::kDivergent:
          ++part.divergent;
          part.divergences.push_back(
              v.variant_id + " " + std::string(ToString(v.kind)) + " " +
              entry.method_id + ": inputs " + JoinValues(verdict.witness) +
              ": original " + verdict.outcome_a.ToString() + ", variant " +
              verdict.outcome_b.ToString());
          break;
      }
    }
  });
  SelfCheckResult out;
  for (SelfCheckResult& part : parts) {
    out.variants += part.variants;
    out.equivalent += part.equivalent;
    out.divergent += part.divergent;
    out.not_checkable += part.not_checkable;
    for (auto& d : part.divergences) out.divergences.push_back(std::move(d));
    for (auto& d : part.diagnostics) out.diagnostics.push_back(std::move(d));
  }
  return out;
}

std::string SerializePairs(const std::vector<PredictionPair>& pairs) {
  std::string out;
  for (const PredictionPair& p : pairs) {
    json row = json::object();
    row["method_id"] = p.method_id;
    row["variant_id"] = p.variant_id;
    row["transform"] = std::string(ToString(p.kind));
    row["label"] = p.label;
    row["truth"] = p.truth;
    row["pred_original"] = p.pred_original;
    row["pred_variant"] = p.pred_variant;
    row["statement_count"] = p.statement_count;
    row["category"] = std::string(ToString(ClassifyPair(p)));
    out += row.dump() + "\n";
  }
  return out;
}

std::vector<PredictionPair> ParsePairs(const std::string& text) {
  std::vector<PredictionPair> out;
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "pairs line " + std::to_string(lineno);
    json row = json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object()) {
      throw InvalidArgument(where + ": not a JSON object");
    }
    try {
      PredictionPair p;
      p.method_id = row.at("method_id").get<std::string>();
      p.variant_id = row.at("variant_id").get<std::string>();
      auto kind = ParseTransformKind(row.at("transform").get<std::string>());
      if (!kind) throw InvalidArgument(where + ": unknown transform");
      p.kind = *kind;
      p.label = row.at("label").get<std::string>();
      p.truth = row.at("truth").get<std::string>();
      p.pred_original = row.at("pred_original").get<std::string>();
      p.pred_variant = row.at("pred_variant").get<std::string>();
      p.statement_count = row.at("statement_count").get<int>();
      out.push_back(std::move(p));
    } catch (const json::exception& e) {
      throw InvalidArgument(where + ": " + e.what());
    }
  }
  return out;
}

void WriteReport(const MetricsReport& report, const std::string& out_dir) {
  for (const auto& [name, content] : RenderReportFiles(report)) {
    WriteFileAtomic(out_dir + "/" + name, content);
  }
}

EvaluateResult Evaluate(const EvaluateOptions& options) {
  const VariantManifest manifest = LoadManifest(options.manifest_path);
  std::string corpus_dir = options.corpus_dir;
  if (corpus_dir.empty()) {
    corpus_dir = fs::path(options.manifest_path).parent_path().string();
    if (corpus_dir.empty()) corpus_dir = ".";
  }
  const CorpusManifest corpus = LoadCorpusManifest(corpus_dir);
  EvaluateResult out;
  out.join = JoinPredictions(manifest, corpus,
                             LoadPredictions(options.pred_original),
                             LoadPredictions(options.pred_variants));
  if (out.join.pairs.empty()) {
    throw EmptyInput("no variant has both predictions");
  }
  out.report = BuildReport(out.join.pairs, options.bucket_edges);
  WriteFileAtomic(options.out_dir + "/pairs.jsonl",
                  SerializePairs(out.join.pairs));
  std::string missing;
  for (const MissingPrediction& m : out.join.missing) {
    json row = json::object();
    row["variant_id"] = m.variant_id;
    row["reason"] = m.reason;
    missing += row.dump() + "\n";
  }
  WriteFileAtomic(options.out_dir + "/missing.jsonl", missing);
  WriteReport(out.report, options.out_dir);
  return out;
}

MetricsReport Report(const std::string& pairs_path, const std::string& out_dir,
                     const std::vector<int>& edges) {
  const std::vector<PredictionPair> pairs = ParsePairs(ReadFile(pairs_path));
  if (pairs.empty()) throw EmptyInput("no pairs in " + pairs_path);
  MetricsReport report = BuildReport(pairs, edges);
  WriteReport(report, out_dir);
  return report;
}

BaselineResult RunBaseline(const std::string& manifest_path,
                           const std::string& out_dir) {
  std::string dir = fs::path(manifest_path).parent_path().string();
  if (dir.empty()) dir = ".";
  const VariantManifest manifest = LoadManifest(manifest_path);
  const CorpusManifest corpus = LoadCorpusManifest(dir);
  BaselineResult result;
  std::string originals;
  for (const CorpusEntry& e : corpus.entries) {
    json row = json::object();
    row["id"] = e.method_id;
    row["prediction"] = BaselinePredict(e.ast);
    originals += row.dump() + "\n";
    ++result.originals;
  }
  std::string variants;
  for (const VariantRow& r : manifest.rows) {
    json row = json::object();
    row["id"] = r.variant_id;
    row["prediction"] = BaselinePredict(ParseMethod(ReadFile(dir + "/" + r.path)));
    variants += row.dump() + "\n";
    ++result.variants;
  }
  WriteFileAtomic(out_dir + "/pred_original.jsonl", originals);
  WriteFileAtomic(out_dir + "/pred_variants.jsonl", variants);
  return result;
}

}  // namespace codemorph
