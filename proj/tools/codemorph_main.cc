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


// The codemorph command-line driver. Everything goes through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "codemorph/codemorph.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDivergent = 2;

struct Config {
  std::string input;
  std::string kind = "all";
  std::string mode = "single";
  std::optional<int> percent;
  uint64_t seed = 0;
  std::optional<int> repeat;
  std::optional<int> min_sites;
  int jobs = 1;
  int trials = 20;
  std::string out;
  std::string manifest;
  std::string corpus_dir;
  std::string pred_original;
  std::string pred_variants;
  std::string pairs;
  std::string buckets;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void PrintLog(void*, const char* message) {
  std::fprintf(stderr, "codemorph: %s\n", message);
}

int Fail(cm_status status) {
  std::fprintf(stderr, "codemorph: error: %s: %s\n", cm_status_name(status),
               cm_last_error());
  return kExitError;
}

class Corpus {
 public:
  ~Corpus() { cm_corpus_free(corpus_); }
  cm_status Ingest(const std::string& path) {
    cm_status s = cm_corpus_ingest(path.c_str(), &corpus_);
    if (s == CM_OK) {
      for (size_t i = 0; i < cm_corpus_diagnostic_count(corpus_); ++i) {
        PrintLog(nullptr, (std::string("warning: ") +
                           cm_corpus_diagnostic(corpus_, i))
                              .c_str());
      }
    }
    return s;
  }
  cm_status Filter(cm_kind kind, int k) {
    cm_corpus* filtered = nullptr;
    cm_status s = cm_corpus_filter_min_sites(corpus_, kind, k, &filtered);
    if (s == CM_OK) {
      cm_corpus_free(corpus_);
      corpus_ = filtered;
    }
    return s;
  }
  const cm_corpus* get() const { return corpus_; }

 private:
  cm_corpus* corpus_ = nullptr;
};

// Resolves --kind into a bit mask; throws UsageError on unknown names.
uint32_t KindMask(const std::string& text) {
  if (text == "all") return CM_KINDS_ALL;
  cm_kind kind;
  if (cm_kind_parse(text.c_str(), &kind) != CM_OK) {
    throw UsageError("unknown --kind '" + text + "'");
  }
  return 1u << kind;
}

// Validates flag combinations before any work happens.
cm_generate_options GenerateOptions(const Config& c) {
  cm_generate_options o;
  cm_generate_options_init(&o);
  o.kinds = KindMask(c.kind);
  if (cm_mode_parse(c.mode.c_str(), &o.mode) != CM_OK) {
    throw UsageError("--mode must be single, all or percent");
  }
  if (o.mode == CM_MODE_PERCENT) {
    if (!c.percent) throw UsageError("--mode percent requires --percent");
    if (*c.percent != 25 && *c.percent != 50 && *c.percent != 75) {
      throw UsageError("--percent must be 25, 50 or 75");
    }
    o.percent = *c.percent;
  } else {
    if (c.percent) throw UsageError("--percent requires --mode percent");
    if (c.repeat) throw UsageError("--repeat requires --mode percent");
  }
  if (c.repeat) {
    if (*c.repeat < 1) throw UsageError("--repeat must be at least 1");
    o.repeat = *c.repeat;
  }
  if (c.min_sites) {
    if (*c.min_sites < 0) throw UsageError("--min-sites must be non-negative");
    o.min_sites = *c.min_sites;
  }
  if (c.jobs < 1) throw UsageError("--jobs must be at least 1");
  o.seed = c.seed;
  o.jobs = c.jobs;
  return o;
}

int RunSites(const Config& c) {
  std::optional<cm_kind> kind;
  if (c.kind != "all") {
    cm_kind k;
    if (cm_kind_parse(c.kind.c_str(), &k) != CM_OK) {
      throw UsageError("unknown --kind '" + c.kind + "'");
    }
    kind = k;
  }
  if (c.min_sites && !kind) throw UsageError("--min-sites requires one --kind");
  Corpus corpus;
  if (cm_status s = corpus.Ingest(c.input); s != CM_OK) return Fail(s);
  if (c.min_sites) {
    if (cm_status s = corpus.Filter(*kind, *c.min_sites); s != CM_OK) {
      return Fail(s);
    }
  }
  char* table = nullptr;
  if (cm_status s = cm_corpus_sites_table(corpus.get(), &table); s != CM_OK) {
    return Fail(s);
  }
  if (c.out.empty()) {
    std::fputs(table, stdout);
  } else {
    std::ofstream out(c.out, std::ios::binary);
    out << table;
    if (!out) {
      cm_string_free(table);
      std::fprintf(stderr, "codemorph: error: cannot write %s\n", c.out.c_str());
      return kExitError;
    }
  }
  cm_string_free(table);
  return kExitOk;
}

int RunTransform(const Config& c) {
  const cm_generate_options o = GenerateOptions(c);
  Corpus corpus;
  if (cm_status s = corpus.Ingest(c.input); s != CM_OK) return Fail(s);
  size_t variants = 0;
  if (cm_status s = cm_emit_variants(corpus.get(), &o, c.out.c_str(), &variants);
      s != CM_OK) {
    return Fail(s);
  }
  std::printf("%zu methods, %zu variants, manifest %s/manifest.jsonl\n",
              cm_corpus_size(corpus.get()), variants, c.out.c_str());
  return kExitOk;
}

int RunSelfcheck(const Config& c) {
  const cm_generate_options o = GenerateOptions(c);
  if (c.trials < 1) throw UsageError("--trials must be at least 1");
  Corpus corpus;
  if (cm_status s = corpus.Ingest(c.input); s != CM_OK) return Fail(s);
  cm_selfcheck_summary r;
  if (cm_status s = cm_selfcheck(corpus.get(), &o, c.trials, &r); s != CM_OK) {
    return Fail(s);
  }
  std::printf(
      "%lld variants: %lld equivalent, %lld divergent, %lld not checkable\n",
      static_cast<long long>(r.variants), static_cast<long long>(r.equivalent),
      static_cast<long long>(r.divergent),
      static_cast<long long>(r.not_checkable));
  return r.divergent > 0 ? kExitDivergent : kExitOk;
}

int RunEvaluate(const Config& c) {
  cm_evaluate_options o{c.manifest.c_str(),
                        c.corpus_dir.empty() ? nullptr : c.corpus_dir.c_str(),
                        c.pred_original.c_str(),
                        c.pred_variants.c_str(),
                        c.out.c_str(),
                        c.buckets.empty() ? nullptr : c.buckets.c_str()};
  cm_evaluate_summary r;
  if (cm_status s = cm_evaluate(&o, &r); s != CM_OK) return Fail(s);
  std::printf("%zu pairs, %zu missing, report %s/report.md\n", r.pairs,
              r.missing, c.out.c_str());
  return kExitOk;
}

int RunReport(const Config& c) {
  if (cm_status s = cm_report(c.pairs.c_str(), c.out.c_str(),
                              c.buckets.empty() ? nullptr : c.buckets.c_str());
      s != CM_OK) {
    return Fail(s);
  }
  std::printf("report %s/report.md\n", c.out.c_str());
  return kExitOk;
}

int RunBaseline(const Config& c) {
  size_t originals = 0, variants = 0;
  if (cm_status s = cm_baseline(c.manifest.c_str(), c.out.c_str(), &originals,
                                &variants);
      s != CM_OK) {
    return Fail(s);
  }
  std::printf("%zu original and %zu variant predictions in %s\n", originals,
              variants, c.out.c_str());
  return kExitOk;
}

void AddGenerateFlags(CLI::App* cmd, Config& c) {
  cmd->add_option("--kind", c.kind,
                  "Transformation kind, or 'all' (default: all)");
  cmd->add_option("--mode", c.mode, "single, all or percent (default: single)");
  cmd->add_option("--percent", c.percent, "25, 50 or 75; needs --mode percent");
  cmd->add_option("--seed", c.seed, "Base seed (default: $CODEMORPH_SEED or 0)")
      ->envname("CODEMORPH_SEED");
  cmd->add_option("--repeat", c.repeat,
                  "Percent-mode runs with seeds seed+1..seed+R (default: 5)");
  cmd->add_option("--min-sites", c.min_sites,
                  "Skip methods with fewer sites of a kind (default: 4 in "
                  "percent mode, else 0)");
  cmd->add_option("--jobs", c.jobs, "Worker threads (default: processors)");
  cmd->add_option("input", c.input, "Directory, .java file or .jsonl corpus")
      ->required();
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  c.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  CLI::App app{"codemorph: semantic-preserving transformations and "
               "generalizability metrics for method-name models"};
  app.set_version_flag("--version", std::string(cm_version()));
  app.require_subcommand(1);

  CLI::App* sites = app.add_subcommand("sites", "Count transformation sites");
  sites->add_option("--kind", c.kind, "Kind used by --min-sites");
  sites->add_option("--min-sites", c.min_sites, "Keep methods with >= N sites");
  sites->add_option("--out", c.out, "Write the CSV here instead of stdout");
  sites->add_option("input", c.input, "Directory, .java file or .jsonl corpus")
      ->required();

  CLI::App* transform = app.add_subcommand("transform", "Emit variants");
  AddGenerateFlags(transform, c);
  transform->add_option("--out", c.out, "Output directory")->required();

  CLI::App* selfcheck = app.add_subcommand(
      "selfcheck", "Check that every variant behaves like its original");
  AddGenerateFlags(selfcheck, c);
  selfcheck->add_option("--trials", c.trials, "Input vectors per variant");

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Join predictions and write a report");
  evaluate->add_option("--manifest", c.manifest, "manifest.jsonl")->required();
  evaluate->add_option("--corpus", c.corpus_dir,
                       "Directory with corpus.jsonl (default: manifest's)");
  evaluate->add_option("--pred-original", c.pred_original,
                       "Predictions for the originals")
      ->required();
  evaluate->add_option("--pred-variants", c.pred_variants,
                       "Predictions for the variants")
      ->required();
  evaluate->add_option("--out", c.out, "Report directory")->required();
  evaluate->add_option("--buckets", c.buckets,
                       "Statement-count bucket lower bounds (default: "
                       "1,6,11,21,51)");

  CLI::App* report =
      app.add_subcommand("report", "Re-render a report from pairs.jsonl");
  report->add_option("--pairs", c.pairs, "pairs.jsonl from evaluate")
      ->required();
  report->add_option("--out", c.out, "Report directory")->required();
  report->add_option("--buckets", c.buckets, "Bucket lower bounds");

  CLI::App* baseline = app.add_subcommand(
      "baseline", "Predict names with the frequency baseline");
  baseline->add_option("--manifest", c.manifest, "manifest.jsonl")->required();
  baseline->add_option("--out", c.out, "Prediction directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  cm_set_log_handler(&PrintLog, nullptr);
  try {
    if (*sites) return RunSites(c);
    if (*transform) return RunTransform(c);
    if (*selfcheck) return RunSelfcheck(c);
    if (*evaluate) return RunEvaluate(c);
    if (*report) return RunReport(c);
    if (*baseline) return RunBaseline(c);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "codemorph: error: %s\nRun with --help for usage.\n",
                 e.what());
    return kExitError;
  }
  return kExitError;
}
