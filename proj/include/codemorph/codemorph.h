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


/* C interface to the codemorph library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a cm_status; on failure cm_last_error()
 * describes the problem until the next call on the same thread. Strings
 * returned through char** are owned by the caller and released with
 * cm_string_free. */

#ifndef CODEMORPH_CODEMORPH_H_
#define CODEMORPH_CODEMORPH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CODEMORPH_API __declspec(dllexport)
#else
#define CODEMORPH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cm_status {
  CM_OK = 0,
  CM_ERR_INVALID_ARGUMENT = 1,
  CM_ERR_LEX = 2,
  CM_ERR_PARSE = 3,
  CM_ERR_UNSUPPORTED_CONSTRUCT = 4,
  CM_ERR_DUPLICATE_DECLARATION = 5,
  CM_ERR_INELIGIBLE_SITE = 6,
  CM_ERR_NAME_COLLISION = 7,
  CM_ERR_MODE_UNSUPPORTED = 8,
  CM_ERR_TYPE_MISMATCH = 9,
  CM_ERR_EMPTY_INPUT = 10,
  CM_ERR_EMPTY_NAME = 11,
  CM_ERR_IO = 12,
  CM_ERR_EMPTY_CORPUS = 13,
  CM_ERR_INTERNAL = 14
} cm_status;

/* Reporting order of the transformation kinds. */
typedef enum cm_kind {
  CM_KIND_VARIABLE_RENAMING = 0,
  CM_KIND_BOOLEAN_EXCHANGE = 1,
  CM_KIND_LOOP_EXCHANGE = 2,
  CM_KIND_SWITCH_TO_IF = 3,
  CM_KIND_PERMUTE_STATEMENT = 4,
  CM_KIND_UNUSED_STATEMENT = 5
} cm_kind;

#define CM_KIND_COUNT 6
#define CM_KINDS_ALL 0x3Fu

typedef enum cm_mode {
  CM_MODE_SINGLE = 0,
  CM_MODE_ALL = 1,
  CM_MODE_PERCENT = 2
} cm_mode;

typedef enum cm_verdict {
  CM_VERDICT_EQUIVALENT = 0,
  CM_VERDICT_DIVERGENT = 1,
  CM_VERDICT_NOT_CHECKABLE = 2
} cm_verdict;

typedef enum cm_category {
  CM_CATEGORY_CCP = 0,
  CM_CATEGORY_CWP = 1,
  CM_CATEGORY_WCP = 2,
  CM_CATEGORY_WWSP = 3,
  CM_CATEGORY_WWDP = 4
} cm_category;

typedef struct cm_method cm_method;
typedef struct cm_variant_list cm_variant_list;
typedef struct cm_corpus cm_corpus;

/* ---- Library ---------------------------------------------------------- */

CODEMORPH_API const char* cm_version(void);
CODEMORPH_API const char* cm_status_name(cm_status status);
CODEMORPH_API const char* cm_last_error(void);
CODEMORPH_API void cm_string_free(char* s);

/* Receives warnings and diagnostics. Calls happen on the thread that made
 * the API call. Pass NULL to discard messages. */
typedef void (*cm_log_fn)(void* user, const char* message);
CODEMORPH_API void cm_set_log_handler(cm_log_fn fn, void* user);

CODEMORPH_API cm_status cm_kind_parse(const char* text, cm_kind* out);
CODEMORPH_API const char* cm_kind_name(cm_kind kind);
CODEMORPH_API cm_status cm_mode_parse(const char* text, cm_mode* out);

/* ---- Methods ---------------------------------------------------------- */

CODEMORPH_API cm_status cm_method_parse(const char* source, cm_method** out);
CODEMORPH_API void cm_method_free(cm_method* method);
CODEMORPH_API cm_status cm_method_print(const cm_method* method, char** out);
CODEMORPH_API cm_status cm_method_name(const cm_method* method, char** out);
CODEMORPH_API cm_status cm_method_count_sites(const cm_method* method,
                                              cm_kind kind, size_t* out);
CODEMORPH_API cm_status cm_method_count_statements(const cm_method* method,
                                                   size_t* out);

/* |percent| must be 25, 50 or 75 in CM_MODE_PERCENT and 0 otherwise. */
CODEMORPH_API cm_status cm_method_transform(const cm_method* method,
                                            const char* method_id,
                                            cm_kind kind, cm_mode mode,
                                            int percent, uint64_t seed,
                                            cm_variant_list** out);
CODEMORPH_API void cm_variant_list_free(cm_variant_list* list);
CODEMORPH_API size_t cm_variant_list_size(const cm_variant_list* list);
/* Borrowed; valid until the list is freed. NULL when out of range. */
CODEMORPH_API const char* cm_variant_list_id(const cm_variant_list* list,
                                             size_t index);
CODEMORPH_API const char* cm_variant_list_source(const cm_variant_list* list,
                                                 size_t index);
CODEMORPH_API size_t cm_variant_list_sites_applied(const cm_variant_list* list,
                                                   size_t index);

CODEMORPH_API cm_status cm_check_equivalence(const cm_method* a,
                                             const cm_method* b, int trials,
                                             uint64_t seed, cm_verdict* out);

CODEMORPH_API cm_status cm_baseline_predict(const cm_method* method,
                                            char** out);

/* ---- Metrics ---------------------------------------------------------- */

typedef struct cm_prf {
  double precision;
  double recall;
  double f1;
} cm_prf;

CODEMORPH_API cm_status cm_normalize_name(const char* raw, char** out);
CODEMORPH_API cm_status cm_classify(const char* truth, const char* before,
                                    const char* after, cm_category* out);
CODEMORPH_API cm_status cm_compute_prf(const char* const* predicted,
                                       const char* const* truth, size_t count,
                                       cm_prf* out);

/* ---- Corpus and pipeline ---------------------------------------------- */

CODEMORPH_API cm_status cm_corpus_ingest(const char* path, cm_corpus** out);
CODEMORPH_API void cm_corpus_free(cm_corpus* corpus);
CODEMORPH_API size_t cm_corpus_size(const cm_corpus* corpus);
CODEMORPH_API size_t cm_corpus_diagnostic_count(const cm_corpus* corpus);
CODEMORPH_API const char* cm_corpus_diagnostic(const cm_corpus* corpus,
                                               size_t index);
CODEMORPH_API cm_status cm_corpus_filter_min_sites(const cm_corpus* corpus,
                                                   cm_kind kind, int k,
                                                   cm_corpus** out);
/* CSV: method id, statement count and one site count per kind. */
CODEMORPH_API cm_status cm_corpus_sites_table(const cm_corpus* corpus,
                                              char** out);

typedef struct cm_generate_options {
  uint32_t kinds; /* bit (1u << kind) per kind; kinds rejecting |mode| skip */
  cm_mode mode;
  int percent;
  uint64_t seed;
  int repeat;    /* percent mode runs seeds seed+1 .. seed+repeat */
  int min_sites; /* negative: 4 in percent mode, no filter otherwise */
  int jobs;
} cm_generate_options;

CODEMORPH_API void cm_generate_options_init(cm_generate_options* options);

CODEMORPH_API cm_status cm_emit_variants(const cm_corpus* corpus,
                                         const cm_generate_options* options,
                                         const char* out_dir,
                                         size_t* variants_out);

typedef struct cm_selfcheck_summary {
  int64_t variants;
  int64_t equivalent;
  int64_t divergent;
  int64_t not_checkable;
} cm_selfcheck_summary;

/* Each divergence is also sent to the log handler. */
CODEMORPH_API cm_status cm_selfcheck(const cm_corpus* corpus,
                                     const cm_generate_options* options,
                                     int trials, cm_selfcheck_summary* out);

typedef struct cm_evaluate_options {
  const char* manifest;
  const char* corpus_dir; /* NULL: the manifest's directory */
  const char* pred_original;
  const char* pred_variants;
  const char* out_dir;
  const char* buckets; /* NULL: "1,6,11,21,51" */
} cm_evaluate_options;

typedef struct cm_evaluate_summary {
  size_t pairs;
  size_t missing;
} cm_evaluate_summary;

CODEMORPH_API cm_status cm_evaluate(const cm_evaluate_options* options,
                                    cm_evaluate_summary* out);
CODEMORPH_API cm_status cm_report(const char* pairs_path, const char* out_dir,
                                  const char* buckets);
CODEMORPH_API cm_status cm_baseline(const char* manifest, const char* out_dir,
                                    size_t* originals_out,
                                    size_t* variants_out);

#ifdef __cplusplus
}
#endif

#endif /* CODEMORPH_CODEMORPH_H_ */
