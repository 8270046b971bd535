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


// Exercises the shared library through its C header only.

#include "codemorph/codemorph.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

constexpr char kCompareTo[] =
    "int compareTo(int value, int otherValue) { int other = otherValue; "
    "if (value < other) { return -1; } else if (value > other) { return 1; } "
    "return 0; }";

std::string Take(char* s) {
  std::string out = s ? s : "";
  cm_string_free(s);
  return out;
}

struct MethodDeleter {
  void operator()(cm_method* m) const { cm_method_free(m); }
};
using MethodPtr = std::unique_ptr<cm_method, MethodDeleter>;

MethodPtr Parse(const char* source) {
  cm_method* m = nullptr;
  EXPECT_EQ(cm_method_parse(source, &m), CM_OK) << cm_last_error();
  return MethodPtr(m);
}

TEST(CApiTest, ParseAndPrint) {
  MethodPtr m = Parse("int f(int a){return a+1;}");
  char* text = nullptr;
  ASSERT_EQ(cm_method_print(m.get(), &text), CM_OK);
  EXPECT_EQ(Take(text), "int f(int a) {\n    return a + 1;\n}");
  char* name = nullptr;
  ASSERT_EQ(cm_method_name(m.get(), &name), CM_OK);
  EXPECT_EQ(Take(name), "f");
}

TEST(CApiTest, ErrorsMapToStatusCodes) {
  cm_method* m = nullptr;
  EXPECT_EQ(cm_method_parse("int f() { return 0x; }", &m), CM_ERR_LEX);
  EXPECT_EQ(m, nullptr);
  EXPECT_NE(std::string(cm_last_error()).find("1:"), std::string::npos);
  EXPECT_EQ(cm_method_parse("int f( { }", &m), CM_ERR_PARSE);
  EXPECT_EQ(cm_method_parse("int f() { g(() -> 1); }", &m),
            CM_ERR_UNSUPPORTED_CONSTRUCT);
  EXPECT_EQ(cm_method_parse(nullptr, &m), CM_ERR_INVALID_ARGUMENT);
  char* out = nullptr;
  EXPECT_EQ(cm_normalize_name("__", &out), CM_ERR_EMPTY_NAME);
  EXPECT_STREQ(cm_status_name(CM_ERR_MODE_UNSUPPORTED), "mode unsupported");
  cm_corpus* corpus = nullptr;
  EXPECT_EQ(cm_corpus_ingest("/nonexistent/path", &corpus), CM_ERR_IO);
}

TEST(CApiTest, KindsAndModes) {
  cm_kind kind;
  ASSERT_EQ(cm_kind_parse("switch-to-if", &kind), CM_OK);
  EXPECT_EQ(kind, CM_KIND_SWITCH_TO_IF);
  EXPECT_STREQ(cm_kind_name(CM_KIND_UNUSED_STATEMENT), "UnusedStatement");
  EXPECT_EQ(cm_kind_parse("Nope", &kind), CM_ERR_INVALID_ARGUMENT);
  cm_mode mode;
  ASSERT_EQ(cm_mode_parse("percent", &mode), CM_OK);
  EXPECT_EQ(mode, CM_MODE_PERCENT);
}

TEST(CApiTest, TransformAndCheck) {
  MethodPtr m = Parse(kCompareTo);
  size_t sites = 0;
  ASSERT_EQ(cm_method_count_sites(m.get(), CM_KIND_VARIABLE_RENAMING, &sites),
            CM_OK);
  EXPECT_EQ(sites, 3u);
  cm_variant_list* list = nullptr;
  ASSERT_EQ(cm_method_transform(m.get(), "compare_to", CM_KIND_VARIABLE_RENAMING,
                                CM_MODE_SINGLE, 0, 1, &list),
            CM_OK);
  ASSERT_EQ(cm_variant_list_size(list), 3u);
  EXPECT_EQ(cm_variant_list_source(list, 3), nullptr);
  for (size_t i = 0; i < cm_variant_list_size(list); ++i) {
    EXPECT_EQ(std::string(cm_variant_list_id(list, i)).size(), 16u);
    EXPECT_EQ(cm_variant_list_sites_applied(list, i), 1u);
    MethodPtr v = Parse(cm_variant_list_source(list, i));
    cm_verdict verdict;
    ASSERT_EQ(cm_check_equivalence(m.get(), v.get(), 20, 5, &verdict), CM_OK);
    EXPECT_EQ(verdict, CM_VERDICT_EQUIVALENT);
  }
  cm_variant_list_free(list);
  EXPECT_EQ(cm_method_transform(m.get(), "compare_to", CM_KIND_PERMUTE_STATEMENT,
                                CM_MODE_ALL, 0, 1, &list),
            CM_ERR_MODE_UNSUPPORTED);
  EXPECT_EQ(cm_method_transform(m.get(), "compare_to", CM_KIND_LOOP_EXCHANGE,
                                CM_MODE_PERCENT, 30, 1, &list),
            CM_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, Metrics) {
  const char* pred[] = {"getItemCount"};
  const char* truth[] = {"getCount"};
  cm_prf prf;
  ASSERT_EQ(cm_compute_prf(pred, truth, 1, &prf), CM_OK);
  EXPECT_NEAR(prf.precision, 0.6667, 1e-4);
  EXPECT_EQ(prf.recall, 1.0);
  EXPECT_NEAR(prf.f1, 0.8, 1e-4);
  EXPECT_EQ(cm_compute_prf(pred, truth, 0, &prf), CM_ERR_EMPTY_INPUT);
  cm_category c;
  ASSERT_EQ(cm_classify("compareTo", "compareTo", "getCount", &c), CM_OK);
  EXPECT_EQ(c, CM_CATEGORY_CWP);
  EXPECT_EQ(Take([] {
              char* s = nullptr;
              cm_normalize_name("HTTPServer2", &s);
              return s;
            }()),
            "http|server|2");
}

void Collect(void* user, const char* message) {
  static_cast<std::vector<std::string>*>(user)->push_back(message);
}

TEST(CApiTest, Pipeline) {
  const fs::path dir = fs::temp_directory_path() /
                       ("codemorph_capi_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir / "in");
  std::ofstream(dir / "in/A.java") << "class A { " << kCompareTo
                                   << " int g(int n) { int s = 0; for (int i "
                                      "= 0; i < n; i++) { s += i; } return s; "
                                      "} }";
  std::vector<std::string> log;
  cm_set_log_handler(&Collect, &log);

  cm_corpus* corpus = nullptr;
  ASSERT_EQ(cm_corpus_ingest((dir / "in").c_str(), &corpus), CM_OK)
      << cm_last_error();
  EXPECT_EQ(cm_corpus_size(corpus), 2u);
  EXPECT_EQ(cm_corpus_diagnostic_count(corpus), 0u);
  char* table = nullptr;
  ASSERT_EQ(cm_corpus_sites_table(corpus, &table), CM_OK);
  EXPECT_NE(Take(table).find("A.java#0:compareTo,6,3,"), std::string::npos);

  cm_corpus* filtered = nullptr;
  ASSERT_EQ(cm_corpus_filter_min_sites(corpus, CM_KIND_VARIABLE_RENAMING, 4,
                                       &filtered),
            CM_OK);
  EXPECT_EQ(cm_corpus_size(filtered), 0u);
  cm_corpus_free(filtered);
  ASSERT_EQ(cm_corpus_filter_min_sites(corpus, CM_KIND_LOOP_EXCHANGE, 1,
                                       &filtered),
            CM_OK);
  EXPECT_EQ(cm_corpus_size(filtered), 1u);
  cm_corpus_free(filtered);

  cm_generate_options opts;
  cm_generate_options_init(&opts);
  opts.seed = 7;
  size_t variants = 0;
  ASSERT_EQ(cm_emit_variants(corpus, &opts, (dir / "out").c_str(), &variants),
            CM_OK)
      << cm_last_error();
  EXPECT_GT(variants, 5u);

  cm_selfcheck_summary check;
  ASSERT_EQ(cm_selfcheck(corpus, &opts, 20, &check), CM_OK);
  EXPECT_EQ(check.variants, static_cast<int64_t>(variants));
  EXPECT_EQ(check.divergent, 0);

  opts.kinds = 1u << CM_KIND_UNUSED_STATEMENT;
  opts.mode = CM_MODE_ALL;
  EXPECT_EQ(cm_emit_variants(corpus, &opts, (dir / "x").c_str(), nullptr),
            CM_ERR_MODE_UNSUPPORTED);

  size_t originals = 0, predicted = 0;
  ASSERT_EQ(cm_baseline((dir / "out/manifest.jsonl").c_str(),
                        (dir / "preds").c_str(), &originals, &predicted),
            CM_OK)
      << cm_last_error();
  EXPECT_EQ(originals, 2u);
  EXPECT_EQ(predicted, variants);

  const std::string manifest = (dir / "out/manifest.jsonl").string();
  const std::string p0 = (dir / "preds/pred_original.jsonl").string();
  const std::string p1 = (dir / "preds/pred_variants.jsonl").string();
  const std::string report = (dir / "report").string();
  cm_evaluate_options eo{manifest.c_str(), nullptr, p0.c_str(), p1.c_str(),
                         report.c_str(), nullptr};
  cm_evaluate_summary summary;
  ASSERT_EQ(cm_evaluate(&eo, &summary), CM_OK) << cm_last_error();
  EXPECT_EQ(summary.pairs, variants);
  EXPECT_EQ(summary.missing, 0u);
  ASSERT_FALSE(log.empty());
  EXPECT_EQ(log.back().rfind("coverage:", 0), 0u);
  EXPECT_TRUE(fs::exists(dir / "report/pcp.md"));
  EXPECT_EQ(cm_report((dir / "report/pairs.jsonl").c_str(),
                      (dir / "again").c_str(), "1,3"),
            CM_OK);
  EXPECT_EQ(cm_report((dir / "report/pairs.jsonl").c_str(),
                      (dir / "again").c_str(), "3,1"),
            CM_ERR_INVALID_ARGUMENT);

  cm_set_log_handler(nullptr, nullptr);
  cm_corpus_free(corpus);
  fs::remove_all(dir);
}

}  // namespace
