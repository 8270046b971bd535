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


#ifndef CODEMORPH_METRICS_H_
#define CODEMORPH_METRICS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codemorph/transform_kind.h"

namespace codemorph {

// Lowercased subtokens. Splits on non-alphanumerics, lower-to-upper
// boundaries, the last capital of an acronym run ("HTTPServer"), and
// letter/digit boundaries.
std::vector<std::string> SplitSubtokens(std::string_view name);

// Subtokens joined with '|'. Throws EmptyName when there are none.
std::string NormalizeName(std::string_view raw);

enum class ChangeCategory { kCCP, kCWP, kWCP, kWWSP, kWWDP };
inline constexpr std::array<ChangeCategory, 5> kAllCategories = {
    ChangeCategory::kCCP, ChangeCategory::kCWP, ChangeCategory::kWCP,
    ChangeCategory::kWWSP, ChangeCategory::kWWDP};
std::string_view ToString(ChangeCategory category);

struct PredictionPair {
  std::string method_id;
  std::string variant_id;
  std::string truth;
  std::string pred_original;
  std::string pred_variant;
  int statement_count = 0;
  TransformKind kind = TransformKind::kVariableRenaming;
  // Groups pairs within a kind, e.g. "single", "all", "percent50".
  std::string label = "single";
};

// Compares normalized names. Throws EmptyName.
ChangeCategory ClassifyPair(const PredictionPair& pair);

// 100 * changed / total. Throws EmptyInput.
double ComputePcp(const std::vector<PredictionPair>& pairs);

struct Breakdown {
  std::array<int64_t, 5> counts{};  // indexed by ChangeCategory
  int64_t total = 0;

  int64_t count(ChangeCategory c) const {
    return counts[static_cast<size_t>(c)];
  }
  void Add(ChangeCategory c) {
    ++counts[static_cast<size_t>(c)];
    ++total;
  }
  void Merge(const Breakdown& other);

  double Pcp() const;  // 100 * (CWP + WCP + WWDP) / total
  // Percentages; nullopt when the denominator is zero.
  std::optional<double> CorrectToWrong() const;  // CWP / (CCP + CWP)
  std::optional<double> WrongToCorrect() const;  // WCP / (WWSP + WWDP + WCP)
};

// Throws EmptyInput.
Breakdown ComputeBreakdown(const std::vector<PredictionPair>& pairs);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Micro-averaged over deduplicated subtoken sets.
class PrfAccumulator {
 public:
  void Add(std::string_view predicted, std::string_view truth);
  void Merge(const PrfAccumulator& other);
  Prf Result() const;
  int64_t records() const { return records_; }

 private:
  int64_t true_positives_ = 0;
  int64_t predicted_ = 0;
  int64_t actual_ = 0;
  int64_t records_ = 0;
};

// |records| holds (predicted, truth). Throws EmptyInput.
Prf ComputePrf(const std::vector<std::pair<std::string, std::string>>& records);

// Lower bounds of the length buckets; the last bucket is open-ended.
inline const std::vector<int> kDefaultBucketEdges = {1, 6, 11, 21, 51};

struct LengthBucket {
  int lo = 0;
  std::optional<int> hi;  // inclusive; nullopt for the last bucket
  int64_t pairs = 0;
  int64_t changed = 0;

  std::optional<double> Pcp() const;  // nullopt when empty
  std::string Label() const;          // "1-5", "51+"
};

// Counts below the first edge fall into the first bucket. Throws
// InvalidArgument unless |edges| is non-empty and strictly increasing.
std::vector<LengthBucket> BucketByLength(const std::vector<PredictionPair>& pairs,
                                         const std::vector<int>& edges =
                                             kDefaultBucketEdges);

// Parses "1,6,11,21,51". Throws InvalidArgument.
std::vector<int> ParseBucketEdges(std::string_view text);

struct GroupReport {
  TransformKind kind = TransformKind::kVariableRenaming;
  std::string label;
  Breakdown breakdown;
  Prf before;  // original predictions against the truth
  Prf after;   // variant predictions against the truth
  std::vector<LengthBucket> buckets;
};

struct MetricsReport {
  std::vector<GroupReport> groups;  // kind order, then label
};

// Throws EmptyInput.
MetricsReport BuildReport(const std::vector<PredictionPair>& pairs,
                          const std::vector<int>& edges = kDefaultBucketEdges);

enum class TableFormat { kCsv, kMarkdown };

std::string RenderPcpTable(const MetricsReport& report, TableFormat format);
std::string RenderBreakdownTable(const MetricsReport& report,
                                 TableFormat format);
std::string RenderPrfTable(const MetricsReport& report, TableFormat format);
std::string RenderLengthTable(const MetricsReport& report, TableFormat format);

// (file name, content) for every table in both formats, plus report.md.
std::vector<std::pair<std::string, std::string>> RenderReportFiles(
    const MetricsReport& report);

}  // namespace codemorph

#endif  // CODEMORPH_METRICS_H_
