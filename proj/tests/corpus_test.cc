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

#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <set>

#include "codemorph/errors.h"
#include "codemorph/generator.h"
#include "codemorph/parser.h"
#include "codemorph/pipeline.h"
#include "codemorph/printer.h"

namespace codemorph {
namespace {

namespace fs = std::filesystem;

constexpr char kCompareTo[] =
    "int compareTo(int value, int otherValue) {\n"
    "    int other = otherValue;\n"
    "    if (value < other) {\n"
    "        return -1;\n"
    "    } else if (value > other) {\n"
    "        return 1;\n"
    "    }\n"
    "    return 0;\n"
    "}\n";

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("codemorph_corpus_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string str() const { return path_.string(); }
  std::string operator/(const std::string& rel) const {
    return (path_ / rel).string();
  }

 private:
  fs::path path_;
};

void Write(const std::string& path, const std::string& text) {
  WriteFileAtomic(path, text);
}

std::map<std::string, std::string> Snapshot(const std::string& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) {
      out[fs::relative(e.path(), dir).generic_string()] =
          ReadFile(e.path().string());
    }
  }
  return out;
}

TEST(IngestTest, DirectoryOfTwoFilesWithTwoMethodsEach) {
  TempDir dir;
  Write(dir / "a/A.java",
        "class A { int f(int x) { return x; } void g() { int y = 1; } }");
  Write(dir / "B.java", "int h() { return 2; }\nint k(int a) { a++; return a; }");
  Write(dir / "notes.txt", "not java");
  const CorpusManifest m = Ingest(dir.str());
  ASSERT_EQ(m.entries.size(), 4u);
  std::vector<std::string> ids;
  for (const auto& e : m.entries) ids.push_back(e.method_id);
  EXPECT_EQ(ids, (std::vector<std::string>{"B.java#0:h", "B.java#1:k",
                                           "a/A.java#0:f", "a/A.java#1:g"}));
  EXPECT_EQ(m.entries[1].name, "k");
  EXPECT_EQ(m.entries[1].statement_count, 2);
  EXPECT_EQ(m.entries[1].sites(TransformKind::kVariableRenaming), 1);
  EXPECT_TRUE(m.diagnostics.empty());
}

TEST(IngestTest, JsonlSkipsMalformedRows) {
  TempDir dir;
  Write(dir / "c.jsonl",
        "{\"id\": \"m1\", \"source\": \"int f() { return 1; }\"}\n"
        "{\"id\": \"m2\", \"source\": \n"
        "{\"id\": \"m3\", \"source\": \"int g(int a) { return a; }\"}\n"
        "{\"id\": \"m4\", \"source\": \"int h() { lambda(() -> 1); }\"}\n");
  const CorpusManifest m = Ingest(dir / "c.jsonl");
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries[0].method_id, "m1");
  EXPECT_EQ(m.entries[1].method_id, "m3");
  ASSERT_EQ(m.diagnostics.size(), 2u);
  EXPECT_NE(m.diagnostics[0].find(":2: malformed"), std::string::npos);
  EXPECT_NE(m.diagnostics[1].find("lambda"), std::string::npos);
}

TEST(IngestTest, Errors) {
  TempDir dir;
  EXPECT_THROW(Ingest(dir.str()), EmptyCorpus);
  EXPECT_THROW(Ingest(dir / "missing"), IoError);
  Write(dir / "bad/X.java", "class X { int f() { try { } } }");
  EXPECT_THROW(Ingest(dir / "bad"), EmptyCorpus);
}

TEST(FilterTest, Examples) {
  CorpusManifest m;
  for (int c : {1, 4, 7}) {
    CorpusEntry e;
    e.method_id = "m" + std::to_string(c);
    e.site_counts[static_cast<size_t>(TransformKind::kLoopExchange)] = c;
    m.entries.push_back(e);
  }
  EXPECT_EQ(FilterMinSites(m, TransformKind::kLoopExchange).entries.size(), 2u);
  EXPECT_EQ(FilterMinSites(m, TransformKind::kLoopExchange, 1).entries.size(), 3u);
  EXPECT_TRUE(FilterMinSites(m, TransformKind::kSwitchToIf).entries.empty());
}

CorpusManifest OneMethod(const std::string& source) {
  return ManifestFromMethods("t", {ParseMethod(source)});
}

TEST(EmitTest, SinglePlaceWritesOneFilePerSite) {
  TempDir out;
  const CorpusManifest corpus =
      OneMethod("int f(int a, int b) { int c = a + b; return c; }");
  EmitOptions opts;
  opts.kinds = {TransformKind::kVariableRenaming};
  opts.seed = 7;
  const EmitResult r = EmitVariants(corpus, opts, out.str());
  ASSERT_EQ(r.manifest.rows.size(), 3u);
  EXPECT_EQ(std::distance(fs::directory_iterator(out / "variants"),
                          fs::directory_iterator{}),
            3);
  std::set<std::string> ids;
  for (const VariantRow& row : r.manifest.rows) {
    ids.insert(row.variant_id);
    EXPECT_EQ(row.sites_applied, 1);
    EXPECT_EQ(row.seed, 7u);
    const std::string text = ReadFile(out / row.path);
    EXPECT_EQ(PrintMethod(ParseMethod(text)) + "\n", text);
    EXPECT_NE(text.find("var0"), std::string::npos);
  }
  EXPECT_EQ(ids.size(), 3u);
  EXPECT_TRUE(std::is_sorted(
      r.manifest.rows.begin(), r.manifest.rows.end(),
      [](const auto& a, const auto& b) { return a.variant_id < b.variant_id; }));
  EXPECT_EQ(LoadManifest(out / "manifest.jsonl").rows, r.manifest.rows);
}

TEST(EmitTest, RerunAndJobsAreByteIdentical) {
  const CorpusManifest corpus = ManifestFromMethods(
      "gen", GenerateFixtures(TransformKind::kLoopExchange, 12, 5));
  EmitOptions opts;
  opts.kinds.assign(kAllTransformKinds.begin(), kAllTransformKinds.end());
  opts.seed = 3;
  TempDir a, b, c;
  opts.jobs = 1;
  EmitVariants(corpus, opts, a.str());
  EmitVariants(corpus, opts, a.str());
  EmitVariants(corpus, opts, b.str());
  opts.jobs = 8;
  EmitVariants(corpus, opts, c.str());
  const auto snap = Snapshot(a.str());
  EXPECT_GT(snap.size(), 20u);
  EXPECT_EQ(snap, Snapshot(b.str()));
  EXPECT_EQ(snap, Snapshot(c.str()));
}

TEST(EmitTest, PercentRepeatUsesConsecutiveSeeds) {
  TempDir out;
  const CorpusManifest corpus = OneMethod(
      "int f(int a, int b, int c, int d) { return a + b + c + d; }");
  EmitOptions opts;
  opts.kinds = {TransformKind::kVariableRenaming};
  opts.mode = Mode::kPercent;
  opts.percent = 50;
  opts.seed = 10;
  const EmitResult r = EmitVariants(corpus, opts, out.str());
  ASSERT_EQ(r.manifest.rows.size(), 5u);
  std::set<uint64_t> seeds;
  for (const VariantRow& row : r.manifest.rows) {
    seeds.insert(row.seed);
    EXPECT_EQ(row.sites_applied, 2);
    EXPECT_EQ(row.percent, 50);
  }
  EXPECT_EQ(seeds, (std::set<uint64_t>{11, 12, 13, 14, 15}));
  const std::string line = ReadFile(out / "manifest.jsonl");
  EXPECT_EQ(line.substr(0, line.find('\n')).find("{\"method_id\":"), 0u);
  for (const char* field : {"\"variant_id\":", "\"transform\":", "\"mode\":",
                            "\"percent\":50", "\"seed\":", "\"sites_applied\":2",
                            "\"path\":\"variants/"}) {
    EXPECT_NE(line.find(field), std::string::npos) << field;
  }
}

TEST(EmitTest, PercentAppliesTheMinSitesFilter) {
  TempDir out;
  const CorpusManifest corpus =
      OneMethod("int f(int a, int b, int c) { return a + b + c; }");
  EmitOptions opts;
  opts.kinds = {TransformKind::kVariableRenaming};
  opts.mode = Mode::kPercent;
  opts.percent = 75;
  EXPECT_TRUE(EmitVariants(corpus, opts, out.str()).manifest.rows.empty());
  opts.min_sites = 1;
  EXPECT_EQ(EmitVariants(corpus, opts, out.str()).manifest.rows.size(), 5u);
}

TEST(EmitTest, NoEligibleMethodsGivesEmptyManifest) {
  TempDir out;
  const CorpusManifest corpus = OneMethod("int f() { return 1; }");
  EmitOptions opts;
  opts.kinds = {TransformKind::kSwitchToIf};
  const EmitResult r = EmitVariants(corpus, opts, out.str());
  EXPECT_TRUE(r.manifest.rows.empty());
  EXPECT_EQ(ReadFile(out / "manifest.jsonl"), "");
  EXPECT_TRUE(fs::exists(out / OriginalPath(corpus.entries[0].method_id)));
}

TEST(EmitTest, ModeRestrictions) {
  TempDir out;
  const CorpusManifest corpus = OneMethod("int f(int a) { a++; a--; return a; }");
  EmitOptions opts;
  opts.kinds = {TransformKind::kPermuteStatement};
  opts.mode = Mode::kAllPlace;
  EXPECT_THROW(EmitVariants(corpus, opts, out.str()), ModeUnsupported);
  opts.kinds.assign(kAllTransformKinds.begin(), kAllTransformKinds.end());
  const EmitResult r = EmitVariants(corpus, opts, out.str());
  EXPECT_EQ(r.diagnostics.size(), 2u);
  opts.mode = Mode::kPercent;
  opts.percent = 30;
  EXPECT_THROW(EmitVariants(corpus, opts, out.str()), InvalidArgument);
}

TEST(CorpusManifestTest, RoundTripsThroughDisk) {
  TempDir out;
  const CorpusManifest corpus = ManifestFromMethods(
      "gen", GenerateFixtures(TransformKind::kSwitchToIf, 5, 1));
  EmitOptions opts;
  opts.kinds = {TransformKind::kSwitchToIf};
  EmitVariants(corpus, opts, out.str());
  const CorpusManifest back = LoadCorpusManifest(out.str());
  ASSERT_EQ(back.entries.size(), corpus.entries.size());
  for (size_t i = 0; i < back.entries.size(); ++i) {
    EXPECT_EQ(back.entries[i].method_id, corpus.entries[i].method_id);
    EXPECT_EQ(back.entries[i].site_counts, corpus.entries[i].site_counts);
    EXPECT_EQ(back.entries[i].statement_count, corpus.entries[i].statement_count);
    EXPECT_TRUE(StructurallyEqual(back.entries[i].ast, corpus.entries[i].ast));
  }
}

struct JoinFixture {
  VariantManifest manifest;
  CorpusManifest corpus;
  JoinFixture() {
    corpus = OneMethod(kCompareTo);
    for (int i = 0; i < 3; ++i) {
      VariantRow row;
      row.method_id = corpus.entries[0].method_id;
      row.variant_id = "v" + std::to_string(i);
      manifest.rows.push_back(row);
    }
  }
};

TEST(JoinTest, AllPresent) {
  JoinFixture f;
  const std::string id = f.corpus.entries[0].method_id;
  const PredictionFile before =
      ParsePredictions("{\"id\":\"" + id + "\",\"prediction\":\"compareTo\"}\n", "p0");
  const PredictionFile after = ParsePredictions(
      "{\"id\":\"v0\",\"prediction\":\"compareTo\"}\n"
      "{\"id\":\"v1\",\"prediction\":\"getCount\"}\n"
      "{\"id\":\"v2\",\"prediction\":\"compare_to\"}\n",
      "p1");
  const JoinResult r = JoinPredictions(f.manifest, f.corpus, before, after);
  ASSERT_EQ(r.pairs.size(), 3u);
  EXPECT_TRUE(r.missing.empty());
  EXPECT_EQ(r.pairs[1].truth, "compareTo");
  EXPECT_EQ(ClassifyPair(r.pairs[1]), ChangeCategory::kCWP);
  EXPECT_EQ(ClassifyPair(r.pairs[2]), ChangeCategory::kCCP);
  EXPECT_EQ(r.pairs[0].statement_count, 6);
}

TEST(JoinTest, MissingAndDuplicates) {
  JoinFixture f;
  const std::string id = f.corpus.entries[0].method_id;
  const PredictionFile before = ParsePredictions(
      "{\"id\":\"" + id + "\",\"prediction\":\"foo\"}\n"
      "{\"id\":\"" + id + "\",\"prediction\":\"compareTo\"}\n",
      "p0");
  EXPECT_EQ(before.predictions.at(id), "compareTo");
  ASSERT_EQ(before.warnings.size(), 1u);
  EXPECT_NE(before.warnings[0].find("p0:2: duplicate id"), std::string::npos);
  const PredictionFile after = ParsePredictions(
      "{\"id\":\"v0\",\"prediction\":\"compareTo\"}\n"
      "not json\n"
      "{\"id\":\"v2\",\"prediction\":\"x\"}\n",
      "p1");
  const JoinResult r = JoinPredictions(f.manifest, f.corpus, before, after);
  EXPECT_EQ(r.pairs.size(), 2u);
  ASSERT_EQ(r.missing.size(), 1u);
  EXPECT_EQ(r.missing[0].variant_id, "v1");
  EXPECT_EQ(r.warnings.size(), 2u);
  EXPECT_EQ(r.pairs.size() + r.missing.size(), f.manifest.rows.size());
}

TEST(JoinTest, EmptyNamesAreRejected) {
  JoinFixture f;
  const std::string id = f.corpus.entries[0].method_id;
  const PredictionFile before =
      ParsePredictions("{\"id\":\"" + id + "\",\"prediction\":\"__\"}\n", "p0");
  const PredictionFile after =
      ParsePredictions("{\"id\":\"v0\",\"prediction\":\"a\"}\n", "p1");
  const JoinResult r = JoinPredictions(f.manifest, f.corpus, before, after);
  EXPECT_TRUE(r.pairs.empty());
  EXPECT_EQ(r.missing.size(), 3u);
}

TEST(BaselineTest, Examples) {
  const MethodAst counting = ParseMethod(
      "int f(int n) { int count = 0; count++; count += 2; return count; }");
  EXPECT_NE(NormalizeName(BaselinePredict(counting)).find("count"),
            std::string::npos);
  EXPECT_EQ(BaselinePredict(ParseMethod("void f() { }")), "unknown");
  EXPECT_EQ(BaselinePredict(ParseMethod("int f() { return 1; }")), "unknown");
  const MethodAst compare_to = ParseMethod(kCompareTo);
  EXPECT_EQ(BaselinePredict(compare_to), BaselinePredict(ParseMethod(kCompareTo)));
  // other x4, value x3.
  EXPECT_EQ(BaselinePredict(compare_to), "otherValue");
  // After other -> var0: value x3 and var x3 tie, broken lexicographically.
  const std::string renamed = BaselinePredict(ParseMethod(
      "int compareTo(int value, int otherValue) { int var0 = otherValue; "
      "if (value < var0) { return -1; } else if (value > var0) { return 1; }"
      " return 0; }"));
  EXPECT_EQ(renamed, "valueVar");
}

TEST(PipelineTest, BaselineEvaluateAndReport) {
  TempDir work;
  const CorpusManifest corpus = ManifestFromMethods(
      "gen", GenerateFixtures(TransformKind::kVariableRenaming, 20, 9));
  EmitOptions opts;
  opts.kinds = {TransformKind::kVariableRenaming, TransformKind::kLoopExchange};
  EmitVariants(corpus, opts, work / "variants");
  const BaselineResult b =
      RunBaseline(work / "variants/manifest.jsonl", work / "preds");
  EXPECT_EQ(b.originals, 20);
  EvaluateOptions eo;
  eo.manifest_path = work / "variants/manifest.jsonl";
  eo.pred_original = work / "preds/pred_original.jsonl";
  eo.pred_variants = work / "preds/pred_variants.jsonl";
  eo.out_dir = work / "report";
  const EvaluateResult r = Evaluate(eo);
  EXPECT_EQ(static_cast<int64_t>(r.join.pairs.size()), b.variants);
  ASSERT_FALSE(r.report.groups.empty());
  EXPECT_EQ(r.report.groups[0].kind, TransformKind::kVariableRenaming);
  EXPECT_GT(r.report.groups[0].breakdown.Pcp(), 0.0);
  for (const char* name : {"pcp.csv", "pcp.md", "breakdown.csv", "breakdown.md",
                           "prf.csv", "prf.md", "length.csv", "length.md",
                           "report.md", "pairs.jsonl", "missing.jsonl"}) {
    EXPECT_TRUE(fs::exists(work / (std::string("report/") + name))) << name;
  }
  Report(work / "report/pairs.jsonl", work / "again");
  EXPECT_EQ(ReadFile(work / "report/report.md"), ReadFile(work / "again/report.md"));
}

TEST(PipelineTest, SelfCheckFindsNoDivergence) {
  const CorpusManifest corpus = ManifestFromMethods(
      "gen", GenerateFixtures(TransformKind::kBooleanExchange, 15, 2));
  EmitOptions opts;
  opts.kinds.assign(kAllTransformKinds.begin(), kAllTransformKinds.end());
  const SelfCheckResult r = SelfCheck(corpus, opts, 20);
  EXPECT_GT(r.variants, 0);
  EXPECT_EQ(r.divergent, 0);
  EXPECT_EQ(r.equivalent + r.not_checkable, r.variants);
}

TEST(PipelineTest, SitesTable) {
  const std::string table = RenderSitesTable(OneMethod(kCompareTo));
  EXPECT_EQ(table,
            "method_id,statements,VariableRenaming,BooleanExchange,LoopExchange,"
            "SwitchToIf,PermuteStatement,UnusedStatement\n"
            "t#00000,6,3,0,0,0,0,3\n");
}

}  // namespace
}  // namespace codemorph
