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


#include "codemorph/corpus.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "codemorph/analysis.h"
#include "codemorph/errors.h"
#include "codemorph/lexer.h"
#include "codemorph/parallel.h"
#include "codemorph/parser.h"
#include "codemorph/printer.h"
#include "codemorph/rng.h"

namespace codemorph {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string WithNewline(std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  return text;
}

// Fills the derived fields of an entry. Returns an error message when the
// method cannot be analyzed.
std::optional<std::string> Analyze(CorpusEntry& entry) {
  try {
    const SymbolTable symbols = ResolveScopes(entry.ast);
    entry.name = entry.ast.name;
    entry.statement_count = CountStatements(entry.ast);
    for (TransformKind kind : kAllTransformKinds) {
      entry.site_counts[static_cast<size_t>(kind)] =
          static_cast<int>(EnumerateSites(entry.ast, symbols, kind).size());
    }
  } catch (const Error& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

void AddMethods(const std::string& source, const std::string& id_prefix,
                const std::string& origin, bool single_id,
                CorpusManifest& out) {
  ExtractResult extracted = ExtractMethods(source);
  for (const Diagnostic& d : extracted.diagnostics) {
    std::string where = origin + ":" + std::to_string(d.line) + ":" +
                        std::to_string(d.col);
    std::string what = d.method.empty() ? "" : " in " + d.method;
    out.diagnostics.push_back(where + ": skipped" + what + ": " + d.message);
  }
  if (extracted.methods.empty() && extracted.diagnostics.empty()) {
    out.diagnostics.push_back(origin + ": no methods found");
  }
  const bool plain = single_id && extracted.methods.size() == 1 &&
                     extracted.diagnostics.empty();
  for (size_t k = 0; k < extracted.methods.size(); ++k) {
    CorpusEntry entry;
    entry.ast = std::move(extracted.methods[k]);
    entry.method_id = plain ? id_prefix
                            : id_prefix + "#" + std::to_string(k) + ":" +
                                  entry.ast.name;
    entry.source_path = origin;
    if (auto error = Analyze(entry)) {
      out.diagnostics.push_back(origin + ": skipped " + entry.method_id + ": " +
                                *error);
      continue;
    }
    out.entries.push_back(std::move(entry));
  }
}

void IngestJsonl(const std::string& path, CorpusManifest& out) {
  std::istringstream in(ReadFile(path));
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    json row = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (row.is_discarded() || !row.is_object() || !row.contains("id") ||
        !row.contains("source") || !row["id"].is_string() ||
        !row["source"].is_string()) {
      out.diagnostics.push_back(where + ": malformed row skipped");
      continue;
    }
    AddMethods(row["source"].get<std::string>(), row["id"].get<std::string>(),
               where, /*single_id=*/true, out);
  }
}

void Finish(CorpusManifest& out) {
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) {
              return a.method_id < b.method_id;
            });
  std::vector<CorpusEntry> unique;
  for (CorpusEntry& e : out.entries) {
    if (!unique.empty() && unique.back().method_id == e.method_id) {
      out.diagnostics.push_back("duplicate method id '" + e.method_id +
                                "': keeping the first");
      continue;
    }
    unique.push_back(std::move(e));
  }
  out.entries = std::move(unique);
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return ss.str();
}

void WriteFileAtomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  std::error_code ec;
  if (target.has_parent_path()) fs::create_directories(target.parent_path(), ec);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    out.flush();
    if (!out) throw IoError("cannot write " + path);
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot write " + path);
  }
}

CorpusManifest Ingest(const std::string& path) {
  CorpusManifest out;
  const fs::path root(path);
  std::error_code ec;
  if (!fs::exists(root, ec)) throw IoError("no such file or directory: " + path);
  out.label = root.filename().string();
  if (out.label.empty()) out.label = root.parent_path().filename().string();

  if (fs::is_directory(root, ec)) {
    std::vector<fs::path> files;
    fs::recursive_directory_iterator it(root, ec), end;
    if (ec) throw IoError("cannot list " + path);
    for (; it != end; it.increment(ec)) {
      if (ec) throw IoError("cannot list " + path);
      if (it->is_regular_file() && it->path().extension() == ".java") {
        files.push_back(it->path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
      const std::string rel = file.lexically_relative(root).generic_string();
      AddMethods(ReadFile(file.string()), rel, rel, /*single_id=*/false, out);
    }
  } else if (root.extension() == ".jsonl" || root.extension() == ".json") {
    IngestJsonl(path, out);
  } else {
    AddMethods(ReadFile(path), root.filename().string(), path,
               /*single_id=*/false, out);
  }
  Finish(out);
  if (out.entries.empty()) {
    throw EmptyCorpus("no supported methods in " + path);
  }
  return out;
}

CorpusManifest ManifestFromMethods(const std::string& label,
                                   const std::vector<MethodAst>& methods) {
  CorpusManifest out;
  out.label = label;
  for (size_t k = 0; k < methods.size(); ++k) {
    CorpusEntry entry;
    entry.ast = methods[k];
    AssignNodeIds(entry.ast);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%05zu", k);
    entry.method_id = label + "#" + buf;
    entry.source_path = label;
    if (auto error = Analyze(entry)) {
      out.diagnostics.push_back("skipped " + entry.method_id + ": " + *error);
      continue;
    }
    out.entries.push_back(std::move(entry));
  }
  Finish(out);
  return out;
}

CorpusManifest FilterMinSites(const CorpusManifest& manifest,
                              TransformKind kind, int k) {
  CorpusManifest out;
  out.label = manifest.label;
  for (const CorpusEntry& e : manifest.entries) {
    if (e.sites(kind) >= k) out.entries.push_back(e);
  }
  return out;
}

std::string OriginalPath(const std::string& method_id) {
  return "originals/m_" + Hex64(Fnv1a64(method_id)) + ".java";
}

std::string ModeLabel(Mode mode, int percent) {
  if (mode == Mode::kPercent) return "percent" + std::to_string(percent);
  return std::string(ToString(mode));
}

std::vector<Variant> GenerateVariants(const CorpusEntry& entry,
                                      const EmitOptions& options) {
  const int min_sites = options.min_sites.value_or(
      options.mode == Mode::kPercent ? 4 : 0);
  std::vector<Variant> out;
  for (TransformKind kind : options.kinds) {
    if (options.mode != Mode::kSinglePlace && !SupportsMultiSite(kind)) continue;
    if (entry.sites(kind) < min_sites) continue;
    TransformRequest request{kind, options.mode, options.percent, options.seed};
    if (options.mode == Mode::kPercent) {
      for (int r = 1; r <= options.repeat; ++r) {
        request.seed = options.seed + static_cast<uint64_t>(r);
        for (Variant& v : Transform(entry.ast, entry.method_id, request)) {
          out.push_back(std::move(v));
        }
      }
    } else {
      for (Variant& v : Transform(entry.ast, entry.method_id, request)) {
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

EmitResult EmitVariants(const CorpusManifest& corpus,
                        const EmitOptions& options,
                        const std::string& out_dir) {
  if (options.mode == Mode::kPercent && options.repeat < 1) {
    throw InvalidArgument("--repeat must be at least 1");
  }
  // Kinds that reject the mode are skipped, unless that leaves nothing.
  std::vector<TransformKind> usable;
  for (TransformKind kind : options.kinds) {
    if (options.mode == Mode::kSinglePlace || SupportsMultiSite(kind)) {
      usable.push_back(kind);
    }
  }
  if (usable.empty() && !options.kinds.empty()) {
    TransformRequest{options.kinds.front(), options.mode, options.percent,
                     options.seed}
        .Validate();
  }
  TransformRequest{TransformKind::kVariableRenaming, options.mode,
                   options.percent, options.seed}
      .Validate();
  EmitResult result;
  for (TransformKind kind : options.kinds) {
    if (std::find(usable.begin(), usable.end(), kind) == usable.end()) {
      result.diagnostics.push_back(std::string(ToString(kind)) +
                                   " skipped: mode " +
                                   std::string(ToString(options.mode)) +
                                   " is unsupported for it");
    }
  }

  const size_t n = corpus.entries.size();
  std::vector<std::vector<VariantRow>> rows(n);
  std::vector<std::vector<std::string>> notes(n);
  ParallelFor(n, options.jobs, [&](size_t i) {
    const CorpusEntry& entry = corpus.entries[i];
    WriteFileAtomic(out_dir + "/" + OriginalPath(entry.method_id),
                    WithNewline(PrintMethod(entry.ast)));
    std::vector<Variant> variants;
    try {
      variants = GenerateVariants(entry, options);
    } catch (const Error& e) {
      notes[i].push_back(entry.method_id + ": " + e.what());
    }
    for (const Variant& v : variants) {
      VariantRow row{v.method_id,
                     v.variant_id,
                     v.kind,
                     v.mode,
                     v.percent,
                     v.seed,
                     static_cast<int>(v.applied_sites.size()),
                     "variants/" + v.variant_id + ".java"};
      WriteFileAtomic(out_dir + "/" + row.path, WithNewline(v.source));
      rows[i].push_back(std::move(row));
    }
  });

  for (size_t i = 0; i < n; ++i) {
    for (VariantRow& row : rows[i]) result.manifest.rows.push_back(std::move(row));
    for (std::string& note : notes[i]) result.diagnostics.push_back(std::move(note));
  }
  std::sort(result.manifest.rows.begin(), result.manifest.rows.end(),
            [](const VariantRow& a, const VariantRow& b) {
              return a.variant_id < b.variant_id;
            });
  WriteFileAtomic(out_dir + "/corpus.jsonl", SerializeCorpus(corpus));
  WriteFileAtomic(out_dir + "/manifest.jsonl",
                  SerializeManifest(result.manifest));
  return result;
}

std::string SerializeManifest(const VariantManifest& manifest) {
  std::string out;
  for (const VariantRow& r : manifest.rows) {
    json row = json::object();
    row["method_id"] = r.method_id;
    row["variant_id"] = r.variant_id;
    row["transform"] = std::string(ToString(r.kind));
    row["mode"] = std::string(ToString(r.mode));
    row["percent"] = r.mode == Mode::kPercent ? json(r.percent) : json(nullptr);
    row["seed"] = r.seed;
    row["sites_applied"] = r.sites_applied;
    row["path"] = r.path;
    out += row.dump() + "\n";
  }
  return out;
}

VariantManifest ParseManifest(const std::string& text) {
  VariantManifest out;
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "manifest line " + std::to_string(lineno);
    json row = json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object()) {
      throw InvalidArgument(where + ": not a JSON object");
    }
    try {
      VariantRow r;
      r.method_id = row.at("method_id").get<std::string>();
      r.variant_id = row.at("variant_id").get<std::string>();
      auto kind = ParseTransformKind(row.at("transform").get<std::string>());
      auto mode = ParseMode(row.at("mode").get<std::string>());
      if (!kind || !mode) throw InvalidArgument(where + ": unknown transform or mode");
      r.kind = *kind;
      r.mode = *mode;
      r.percent = row.at("percent").is_null() ? 0 : row.at("percent").get<int>();
      r.seed = row.at("seed").get<uint64_t>();
      r.sites_applied = row.at("sites_applied").get<int>();
      r.path = row.at("path").get<std::string>();
      out.rows.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw InvalidArgument(where + ": " + e.what());
    }
  }
  std::set<std::string> seen;
  for (const VariantRow& r : out.rows) {
    if (!seen.insert(r.variant_id).second) {
      throw InvalidArgument("duplicate variant id " + r.variant_id);
    }
  }
  return out;
}

VariantManifest LoadManifest(const std::string& path) {
  return ParseManifest(ReadFile(path));
}

std::string SerializeCorpus(const CorpusManifest& corpus) {
  std::string out;
  for (const CorpusEntry& e : corpus.entries) {
    json row = json::object();
    row["method_id"] = e.method_id;
    row["source_path"] = e.source_path;
    row["name"] = e.name;
    row["statement_count"] = e.statement_count;
    json sites = json::object();
    for (TransformKind kind : kAllTransformKinds) {
      sites[std::string(ToString(kind))] = e.sites(kind);
    }
    row["sites"] = sites;
    row["path"] = OriginalPath(e.method_id);
    out += row.dump() + "\n";
  }
  return out;
}

CorpusManifest LoadCorpusManifest(const std::string& out_dir) {
  CorpusManifest out;
  out.label = fs::path(out_dir).filename().string();
  std::istringstream in(ReadFile(out_dir + "/corpus.jsonl"));
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "corpus line " + std::to_string(lineno);
    json row = json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object()) {
      throw InvalidArgument(where + ": not a JSON object");
    }
    CorpusEntry e;
    try {
      e.method_id = row.at("method_id").get<std::string>();
      e.source_path = row.at("source_path").get<std::string>();
      e.ast = ParseMethod(ReadFile(out_dir + "/" + row.at("path").get<std::string>()));
    } catch (const json::exception& ex) {
      throw InvalidArgument(where + ": " + ex.what());
    }
    if (auto error = Analyze(e)) throw InvalidArgument(where + ": " + *error);
    out.entries.push_back(std::move(e));
  }
  Finish(out);
  return out;
}

PredictionFile ParsePredictions(const std::string& text,
                                const std::string& origin) {
  PredictionFile out;
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    json row = json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object() || !row.contains("id") ||
        !row.contains("prediction") || !row["id"].is_string() ||
        !row["prediction"].is_string()) {
      out.warnings.push_back(where + ": malformed prediction row skipped");
      continue;
    }
    const std::string id = row["id"].get<std::string>();
    auto [it, inserted] =
        out.predictions.insert_or_assign(id, row["prediction"].get<std::string>());
    if (!inserted) {
      out.warnings.push_back(where + ": duplicate id '" + id +
                             "', keeping the last");
    }
  }
  return out;
}

PredictionFile LoadPredictions(const std::string& path) {
  return ParsePredictions(ReadFile(path), path);
}

JoinResult JoinPredictions(const VariantManifest& variants,
                           const CorpusManifest& corpus,
                           const PredictionFile& original,
                           const PredictionFile& variant) {
  JoinResult out;
  out.warnings = original.warnings;
  out.warnings.insert(out.warnings.end(), variant.warnings.begin(),
                      variant.warnings.end());
  std::map<std::string, const CorpusEntry*> by_id;
  for (const CorpusEntry& e : corpus.entries) by_id[e.method_id] = &e;

  auto nonempty = [](const std::string& name) {
    try {
      NormalizeName(name);
      return true;
    } catch (const EmptyName&) {
      return false;
    }
  };
  for (const VariantRow& row : variants.rows) {
    auto entry = by_id.find(row.method_id);
    auto before = original.predictions.find(row.method_id);
    auto after = variant.predictions.find(row.variant_id);
    std::string reason;
    if (entry == by_id.end()) {
      reason = "method not in corpus";
    } else if (before == original.predictions.end()) {
      reason = "no prediction for the original";
    } else if (after == variant.predictions.end()) {
      reason = "no prediction for the variant";
    } else if (!nonempty(entry->second->name) || !nonempty(before->second) ||
               !nonempty(after->second)) {
      reason = "empty name";
    }
    if (!reason.empty()) {
      out.missing.push_back({row.variant_id, reason});
      continue;
    }
    PredictionPair p;
    p.method_id = row.method_id;
    p.variant_id = row.variant_id;
    p.truth = entry->second->name;
    p.pred_original = before->second;
    p.pred_variant = after->second;
    p.statement_count = entry->second->statement_count;
    p.kind = row.kind;
    p.label = ModeLabel(row.mode, row.percent);
    out.pairs.push_back(std::move(p));
  }
  return out;
}

std::string BaselinePredict(const MethodAst& method) {
  std::map<std::string, int> counts;
  for (const Token& t : Tokenize(PrintStmt(method.body))) {
    if (t.kind != TokenKind::kIdentifier) continue;
    for (const std::string& sub : SplitSubtokens(t.lexeme)) {
      const bool digits = std::all_of(sub.begin(), sub.end(), [](char c) {
        return c >= '0' && c <= '9';
      });
      if (!digits) ++counts[sub];
    }
  }
  if (counts.empty()) return "unknown";
  std::vector<std::pair<std::string, int>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::string out = ranked[0].first;
  if (ranked.size() > 1) {
    std::string second = ranked[1].first;
    second[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(second[0])));
    out += second;
  }
  return out;
}

}  // namespace codemorph
