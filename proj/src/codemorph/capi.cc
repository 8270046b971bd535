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


#include "codemorph/codemorph.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <new>
#include <string>
#include <vector>

#include "codemorph/analysis.h"
#include "codemorph/corpus.h"
#include "codemorph/errors.h"
#include "codemorph/interp.h"
#include "codemorph/metrics.h"
#include "codemorph/parser.h"
#include "codemorph/pipeline.h"
#include "codemorph/printer.h"
#include "codemorph/transform.h"

struct cm_method {
  codemorph::MethodAst ast;
};

struct cm_variant_list {
  std::vector<codemorph::Variant> variants;
};

struct cm_corpus {
  codemorph::CorpusManifest manifest;
};

namespace {

using namespace codemorph;

thread_local std::string g_last_error;

std::mutex g_log_mu;
cm_log_fn g_log_fn = nullptr;
void* g_log_user = nullptr;

void Log(const std::string& message) {
  cm_log_fn fn;
  void* user;
  {
    std::lock_guard<std::mutex> lock(g_log_mu);
    fn = g_log_fn;
    user = g_log_user;
  }
  if (fn) fn(user, message.c_str());
}

void LogAll(const std::vector<std::string>& messages) {
  for (const std::string& m : messages) Log(m);
}

cm_status Fail(cm_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs |fn|, translating exceptions into status codes.
template <typename Fn>
cm_status Guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CM_OK;
  } catch (const LexError& e) {
    return Fail(CM_ERR_LEX, e.what());
  } catch (const ParseError& e) {
    return Fail(CM_ERR_PARSE, e.what());
  } catch (const UnsupportedConstruct& e) {
    return Fail(CM_ERR_UNSUPPORTED_CONSTRUCT, e.what());
  } catch (const DuplicateDeclaration& e) {
    return Fail(CM_ERR_DUPLICATE_DECLARATION, e.what());
  } catch (const IneligibleSite& e) {
    return Fail(CM_ERR_INELIGIBLE_SITE, e.what());
  } catch (const NameCollision& e) {
    return Fail(CM_ERR_NAME_COLLISION, e.what());
  } catch (const ModeUnsupported& e) {
    return Fail(CM_ERR_MODE_UNSUPPORTED, e.what());
  } catch (const TypeMismatch& e) {
    return Fail(CM_ERR_TYPE_MISMATCH, e.what());
  } catch (const EmptyInput& e) {
    return Fail(CM_ERR_EMPTY_INPUT, e.what());
  } catch (const EmptyName& e) {
    return Fail(CM_ERR_EMPTY_NAME, e.what());
  } catch (const IoError& e) {
    return Fail(CM_ERR_IO, e.what());
  } catch (const EmptyCorpus& e) {
    return Fail(CM_ERR_EMPTY_CORPUS, e.what());
  } catch (const InvalidArgument& e) {
    return Fail(CM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(CM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(CM_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(CM_ERR_INTERNAL, "unknown error");
  }
}

#define CM_REQUIRE(cond)                                              \
  do {                                                                \
    if (!(cond)) return Fail(CM_ERR_INVALID_ARGUMENT, #cond " failed"); \
  } while (0)

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool ValidKind(cm_kind kind) { return kind >= 0 && kind < CM_KIND_COUNT; }

TransformKind ToKind(cm_kind kind) { return static_cast<TransformKind>(kind); }

Mode ToMode(cm_mode mode) {
  switch (mode) {
    case CM_MODE_SINGLE:
      return Mode::kSinglePlace;
    case CM_MODE_ALL:
      return Mode::kAllPlace;
    case CM_MODE_PERCENT:
      return Mode::kPercent;
  }
  throw InvalidArgument("unknown mode");
}

EmitOptions ToEmitOptions(const cm_generate_options& o) {
  EmitOptions out;
  for (int k = 0; k < CM_KIND_COUNT; ++k) {
    if (o.kinds & (1u << k)) out.kinds.push_back(static_cast<TransformKind>(k));
  }
  if (out.kinds.empty()) throw InvalidArgument("no transformation kind selected");
  out.mode = ToMode(o.mode);
  out.percent = o.percent;
  out.seed = o.seed;
  out.repeat = o.repeat;
  if (o.min_sites >= 0) out.min_sites = o.min_sites;
  out.jobs = o.jobs;
  return out;
}

std::vector<int> Edges(const char* buckets) {
  return buckets ? ParseBucketEdges(buckets) : kDefaultBucketEdges;
}

}  // namespace

extern "C" {

const char* cm_version(void) { return "1.0.0"; }

const char* cm_status_name(cm_status status) {
  switch (status) {
    case CM_OK: return "ok";
    case CM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CM_ERR_LEX: return "lex error";
    case CM_ERR_PARSE: return "parse error";
    case CM_ERR_UNSUPPORTED_CONSTRUCT: return "unsupported construct";
    case CM_ERR_DUPLICATE_DECLARATION: return "duplicate declaration";
    case CM_ERR_INELIGIBLE_SITE: return "ineligible site";
    case CM_ERR_NAME_COLLISION: return "name collision";
    case CM_ERR_MODE_UNSUPPORTED: return "mode unsupported";
    case CM_ERR_TYPE_MISMATCH: return "type mismatch";
    case CM_ERR_EMPTY_INPUT: return "empty input";
    case CM_ERR_EMPTY_NAME: return "empty name";
    case CM_ERR_IO: return "i/o error";
    case CM_ERR_EMPTY_CORPUS: return "empty corpus";
    case CM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cm_last_error(void) { return g_last_error.c_str(); }

void cm_string_free(char* s) { std::free(s); }

void cm_set_log_handler(cm_log_fn fn, void* user) {
  std::lock_guard<std::mutex> lock(g_log_mu);
  g_log_fn = fn;
  g_log_user = user;
}

cm_status cm_kind_parse(const char* text, cm_kind* out) {
  CM_REQUIRE(text && out);
  auto kind = ParseTransformKind(text);
  if (!kind) {
    return Fail(CM_ERR_INVALID_ARGUMENT,
                std::string("unknown transformation kind '") + text + "'");
  }
  *out = static_cast<cm_kind>(*kind);
  g_last_error.clear();
  return CM_OK;
}

const char* cm_kind_name(cm_kind kind) {
  if (!ValidKind(kind)) return "";
  return ToString(ToKind(kind)).data();
}

cm_status cm_mode_parse(const char* text, cm_mode* out) {
  CM_REQUIRE(text && out);
  auto mode = ParseMode(text);
  if (!mode) {
    return Fail(CM_ERR_INVALID_ARGUMENT,
                std::string("unknown mode '") + text + "'");
  }
  *out = static_cast<cm_mode>(*mode);
  g_last_error.clear();
  return CM_OK;
}

cm_status cm_method_parse(const char* source, cm_method** out) {
  CM_REQUIRE(source && out);
  *out = nullptr;
  return Guard([&] {
    auto m = std::make_unique<cm_method>();
    m->ast = ParseMethod(source);
    *out = m.release();
  });
}

void cm_method_free(cm_method* method) { delete method; }

cm_status cm_method_print(const cm_method* method, char** out) {
  CM_REQUIRE(method && out);
  return Guard([&] { *out = Dup(PrintMethod(method->ast)); });
}

cm_status cm_method_name(const cm_method* method, char** out) {
  CM_REQUIRE(method && out);
  return Guard([&] { *out = Dup(method->ast.name); });
}

cm_status cm_method_count_sites(const cm_method* method, cm_kind kind,
                                size_t* out) {
  CM_REQUIRE(method && out && ValidKind(kind));
  return Guard([&] { *out = EnumerateSites(method->ast, ToKind(kind)).size(); });
}

cm_status cm_method_count_statements(const cm_method* method, size_t* out) {
  CM_REQUIRE(method && out);
  return Guard([&] {
    *out = static_cast<size_t>(CountStatements(method->ast));
  });
}

cm_status cm_method_transform(const cm_method* method, const char* method_id,
                              cm_kind kind, cm_mode mode, int percent,
                              uint64_t seed, cm_variant_list** out) {
  CM_REQUIRE(method && method_id && out && ValidKind(kind));
  *out = nullptr;
  return Guard([&] {
    TransformRequest request{ToKind(kind), ToMode(mode), percent, seed};
    auto list = std::make_unique<cm_variant_list>();
    list->variants = Transform(method->ast, method_id, request);
    *out = list.release();
  });
}

void cm_variant_list_free(cm_variant_list* list) { delete list; }

size_t cm_variant_list_size(const cm_variant_list* list) {
  return list ? list->variants.size() : 0;
}

const char* cm_variant_list_id(const cm_variant_list* list, size_t index) {
  if (!list || index >= list->variants.size()) return nullptr;
  return list->variants[index].variant_id.c_str();
}

const char* cm_variant_list_source(const cm_variant_list* list, size_t index) {
  if (!list || index >= list->variants.size()) return nullptr;
  return list->variants[index].source.c_str();
}

size_t cm_variant_list_sites_applied(const cm_variant_list* list,
                                     size_t index) {
  if (!list || index >= list->variants.size()) return 0;
  return list->variants[index].applied_sites.size();
}

cm_status cm_check_equivalence(const cm_method* a, const cm_method* b,
                               int trials, uint64_t seed, cm_verdict* out) {
  CM_REQUIRE(a && b && out && trials > 0);
  return Guard([&] {
    const EquivalenceVerdict v = CheckEquivalence(a->ast, b->ast, trials, seed);
    switch (v.status) {
      case VerdictStatus::kEquivalent:
        *out = CM_VERDICT_EQUIVALENT;
        break;
      case VerdictStatus::kDivergent:
        *out = CM_VERDICT_DIVERGENT;
        break;
      case VerdictStatus::kNotCheckable:
        *out = CM_VERDICT_NOT_CHECKABLE;
        break;
    }
  });
}

cm_status cm_baseline_predict(const cm_method* method, char** out) {
  CM_REQUIRE(method && out);
  return Guard([&] { *out = Dup(BaselinePredict(method->ast)); });
}

cm_status cm_normalize_name(const char* raw, char** out) {
  CM_REQUIRE(raw && out);
  return Guard([&] { *out = Dup(NormalizeName(raw)); });
}

cm_status cm_classify(const char* truth, const char* before, const char* after,
                      cm_category* out) {
  CM_REQUIRE(truth && before && after && out);
  return Guard([&] {
    PredictionPair p;
    p.truth = truth;
    p.pred_original = before;
    p.pred_variant = after;
    *out = static_cast<cm_category>(ClassifyPair(p));
  });
}

cm_status cm_compute_prf(const char* const* predicted, const char* const* truth,
                         size_t count, cm_prf* out) {
  CM_REQUIRE(out && (count == 0 || (predicted && truth)));
  return Guard([&] {
    std::vector<std::pair<std::string, std::string>> records;
    for (size_t i = 0; i < count; ++i) {
      if (!predicted[i] || !truth[i]) throw InvalidArgument("null name");
      records.emplace_back(predicted[i], truth[i]);
    }
    const Prf prf = ComputePrf(records);
    *out = cm_prf{prf.precision, prf.recall, prf.f1};
  });
}

cm_status cm_corpus_ingest(const char* path, cm_corpus** out) {
  CM_REQUIRE(path && out);
  *out = nullptr;
  return Guard([&] {
    auto corpus = std::make_unique<cm_corpus>();
    corpus->manifest = Ingest(path);
    *out = corpus.release();
  });
}

void cm_corpus_free(cm_corpus* corpus) { delete corpus; }

size_t cm_corpus_size(const cm_corpus* corpus) {
  return corpus ? corpus->manifest.entries.size() : 0;
}

size_t cm_corpus_diagnostic_count(const cm_corpus* corpus) {
  return corpus ? corpus->manifest.diagnostics.size() : 0;
}

const char* cm_corpus_diagnostic(const cm_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->manifest.diagnostics.size()) return nullptr;
  return corpus->manifest.diagnostics[index].c_str();
}

cm_status cm_corpus_filter_min_sites(const cm_corpus* corpus, cm_kind kind,
                                     int k, cm_corpus** out) {
  CM_REQUIRE(corpus && out && ValidKind(kind));
  *out = nullptr;
  return Guard([&] {
    auto filtered = std::make_unique<cm_corpus>();
    filtered->manifest = FilterMinSites(corpus->manifest, ToKind(kind), k);
    *out = filtered.release();
  });
}

cm_status cm_corpus_sites_table(const cm_corpus* corpus, char** out) {
  CM_REQUIRE(corpus && out);
  return Guard([&] { *out = Dup(RenderSitesTable(corpus->manifest)); });
}

void cm_generate_options_init(cm_generate_options* options) {
  if (!options) return;
  options->kinds = CM_KINDS_ALL;
  options->mode = CM_MODE_SINGLE;
  options->percent = 0;
  options->seed = 0;
  options->repeat = 5;
  options->min_sites = -1;
  options->jobs = 1;
}

cm_status cm_emit_variants(const cm_corpus* corpus,
                           const cm_generate_options* options,
                           const char* out_dir, size_t* variants_out) {
  CM_REQUIRE(corpus && options && out_dir);
  return Guard([&] {
    const EmitResult r =
        EmitVariants(corpus->manifest, ToEmitOptions(*options), out_dir);
    LogAll(r.diagnostics);
    if (variants_out) *variants_out = r.manifest.rows.size();
  });
}

cm_status cm_selfcheck(const cm_corpus* corpus,
                       const cm_generate_options* options, int trials,
                       cm_selfcheck_summary* out) {
  CM_REQUIRE(corpus && options && out);
  return Guard([&] {
    const SelfCheckResult r =
        SelfCheck(corpus->manifest, ToEmitOptions(*options), trials);
    LogAll(r.diagnostics);
    for (const std::string& d : r.divergences) Log("divergent: " + d);
    *out = cm_selfcheck_summary{r.variants, r.equivalent, r.divergent,
                                r.not_checkable};
  });
}

cm_status cm_evaluate(const cm_evaluate_options* options,
                      cm_evaluate_summary* out) {
  CM_REQUIRE(options && options->manifest && options->pred_original &&
             options->pred_variants && options->out_dir);
  return Guard([&] {
    EvaluateOptions eo;
    eo.manifest_path = options->manifest;
    if (options->corpus_dir) eo.corpus_dir = options->corpus_dir;
    eo.pred_original = options->pred_original;
    eo.pred_variants = options->pred_variants;
    eo.out_dir = options->out_dir;
    eo.bucket_edges = Edges(options->buckets);
    const EvaluateResult r = Evaluate(eo);
    LogAll(r.join.warnings);
    const size_t total = r.join.pairs.size() + r.join.missing.size();
    Log("coverage: " + std::to_string(r.join.pairs.size()) + " of " +
        std::to_string(total) + " variants joined, " +
        std::to_string(r.join.missing.size()) + " missing");
    if (out) *out = cm_evaluate_summary{r.join.pairs.size(), r.join.missing.size()};
  });
}

cm_status cm_report(const char* pairs_path, const char* out_dir,
                    const char* buckets) {
  CM_REQUIRE(pairs_path && out_dir);
  return Guard([&] { Report(pairs_path, out_dir, Edges(buckets)); });
}

cm_status cm_baseline(const char* manifest, const char* out_dir,
                      size_t* originals_out, size_t* variants_out) {
  CM_REQUIRE(manifest && out_dir);
  return Guard([&] {
    const BaselineResult r = RunBaseline(manifest, out_dir);
    if (originals_out) *originals_out = static_cast<size_t>(r.originals);
    if (variants_out) *variants_out = static_cast<size_t>(r.variants);
  });
}

}  // extern "C"
