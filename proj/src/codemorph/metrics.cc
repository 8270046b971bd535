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


#include "codemorph/metrics.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <tuple>

#include "codemorph/errors.h"

namespace codemorph {

namespace {

enum class CharClass { kLower, kUpper, kDigit, kOther };

CharClass Classify(char c) {
  const unsigned char u = static_cast<unsigned char>(c);
  if (std::isupper(u)) return CharClass::kUpper;
  if (std::isdigit(u)) return CharClass::kDigit;
  // Non-ASCII bytes stay inside words.
  if (std::islower(u) || u >= 0x80) return CharClass::kLower;
  return CharClass::kOther;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

std::vector<std::string> SplitSubtokens(std::string_view name) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) out.push_back(Lower(current));
    current.clear();
  };
  for (size_t i = 0; i < name.size(); ++i) {
    const CharClass c = Classify(name[i]);
    if (c == CharClass::kOther) {
      flush();
      continue;
    }
    if (!current.empty()) {
      const CharClass p = Classify(current.back());
      const bool letter = c != CharClass::kDigit;
      const bool prev_letter = p != CharClass::kDigit;
      if (letter != prev_letter) {
        flush();
      } else if (p == CharClass::kLower && c == CharClass::kUpper) {
        flush();
      } else if (p == CharClass::kUpper && c == CharClass::kUpper &&
                 i + 1 < name.size() &&
                 Classify(name[i + 1]) == CharClass::kLower) {
        // "HTTPServer": the S starts a new word.
        flush();
      }
    }
    current += name[i];
  }
  flush();
  return out;
}

std::string NormalizeName(std::string_view raw) {
  const std::vector<std::string> parts = SplitSubtokens(raw);
  if (parts.empty()) {
    throw EmptyName("name '" + std::string(raw) + "' has no subtokens");
  }
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '|';
    out += parts[i];
  }
  return out;
}

std::string_view ToString(ChangeCategory category) {
  switch (category) {
    case ChangeCategory::kCCP: return "CCP";
    case ChangeCategory::kCWP: return "CWP";
    case ChangeCategory::kWCP: return "WCP";
    case ChangeCategory::kWWSP: return "WWSP";
    case ChangeCategory::kWWDP: return "WWDP";
  }
  return "?";
}

ChangeCategory ClassifyPair(const PredictionPair& pair) {
  const std::string truth = NormalizeName(pair.truth);
  const std::string before = NormalizeName(pair.pred_original);
  const std::string after = NormalizeName(pair.pred_variant);
  const bool was_right = before == truth;
  const bool is_right = after == truth;
  if (was_right && is_right) return ChangeCategory::kCCP;
  if (was_right) return ChangeCategory::kCWP;
  if (is_right) return ChangeCategory::kWCP;
  return before == after ? ChangeCategory::kWWSP : ChangeCategory::kWWDP;
}

void Breakdown::Merge(const Breakdown& other) {
  for (size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  total += other.total;
}

double Breakdown::Pcp() const {
  if (total == 0) return 0.0;
  const int64_t changed = count(ChangeCategory::kCWP) +
                          count(ChangeCategory::kWCP) +
                          count(ChangeCategory::kWWDP);
  return 100.0 * static_cast<double>(changed) / static_cast<double>(total);
}

std::optional<double> Breakdown::CorrectToWrong() const {
  const int64_t denom = count(ChangeCategory::kCCP) + count(ChangeCategory::kCWP);
  if (denom == 0) return std::nullopt;
  return 100.0 * static_cast<double>(count(ChangeCategory::kCWP)) /
         static_cast<double>(denom);
}

std::optional<double> Breakdown::WrongToCorrect() const {
  const int64_t denom = count(ChangeCategory::kWWSP) +
                        count(ChangeCategory::kWWDP) +
                        count(ChangeCategory::kWCP);
  if (denom == 0) return std::nullopt;
  return 100.0 * static_cast<double>(count(ChangeCategory::kWCP)) /
         static_cast<double>(denom);
}

Breakdown ComputeBreakdown(const std::vector<PredictionPair>& pairs) {
  if (pairs.empty()) throw EmptyInput("no prediction pairs");
  Breakdown b;
  for (const PredictionPair& p : pairs) b.Add(ClassifyPair(p));
  return b;
}

double ComputePcp(const std::vector<PredictionPair>& pairs) {
  if (pairs.empty()) throw EmptyInput("no prediction pairs");
  int64_t changed = 0;
  for (const PredictionPair& p : pairs) {
    if (NormalizeName(p.pred_original) != NormalizeName(p.pred_variant)) {
      ++changed;
    }
  }
  return 100.0 * static_cast<double>(changed) /
         static_cast<double>(pairs.size());
}

void PrfAccumulator::Add(std::string_view predicted, std::string_view truth) {
  const auto p = SplitSubtokens(predicted);
  const auto t = SplitSubtokens(truth);
  const std::set<std::string> ps(p.begin(), p.end());
  const std::set<std::string> ts(t.begin(), t.end());
  for (const auto& s : ps) true_positives_ += ts.count(s);
  predicted_ += static_cast<int64_t>(ps.size());
  actual_ += static_cast<int64_t>(ts.size());
  ++records_;
}

void PrfAccumulator::Merge(const PrfAccumulator& other) {
  true_positives_ += other.true_positives_;
  predicted_ += other.predicted_;
  actual_ += other.actual_;
  records_ += other.records_;
}

Prf PrfAccumulator::Result() const {
  Prf r;
  if (predicted_ > 0) {
    r.precision = static_cast<double>(true_positives_) /
                  static_cast<double>(predicted_);
  }
  if (actual_ > 0) {
    r.recall =
        static_cast<double>(true_positives_) / static_cast<double>(actual_);
  }
  if (r.precision + r.recall > 0) {
    r.f1 = 2 * r.precision * r.recall / (r.precision + r.recall);
  }
  return r;
}

Prf ComputePrf(
    const std::vector<std::pair<std::string, std::string>>& records) {
  if (records.empty()) throw EmptyInput("no prediction records");
  PrfAccumulator acc;
  for (const auto& [pred, truth] : records) acc.Add(pred, truth);
  return acc.Result();
}

std::optional<double> LengthBucket::Pcp() const {
  if (pairs == 0) return std::nullopt;
  return 100.0 * static_cast<double>(changed) / static_cast<double>(pairs);
}

std::string LengthBucket::Label() const {
  if (!hi) return std::to_string(lo) + "+";
  return std::to_string(lo) + "-" + std::to_string(*hi);
}

namespace {

void CheckEdges(const std::vector<int>& edges) {
  if (edges.empty()) throw InvalidArgument("bucket edges must not be empty");
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] <= edges[i - 1]) {
      throw InvalidArgument("bucket edges must be strictly increasing");
    }
  }
}

std::vector<LengthBucket> EmptyBuckets(const std::vector<int>& edges) {
  std::vector<LengthBucket> out;
  for (size_t i = 0; i < edges.size(); ++i) {
    LengthBucket b;
    b.lo = edges[i];
    if (i + 1 < edges.size()) b.hi = edges[i + 1] - 1;
    out.push_back(b);
  }
  return out;
}

size_t BucketIndex(const std::vector<int>& edges, int count) {
  size_t idx = 0;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (count >= edges[i]) idx = i;
  }
  return idx;
}

}  // namespace

std::vector<LengthBucket> BucketByLength(const std::vector<PredictionPair>& pairs,
                                         const std::vector<int>& edges) {
  CheckEdges(edges);
  std::vector<LengthBucket> out = EmptyBuckets(edges);
  for (const PredictionPair& p : pairs) {
    LengthBucket& b = out[BucketIndex(edges, p.statement_count)];
    ++b.pairs;
    if (NormalizeName(p.pred_original) != NormalizeName(p.pred_variant)) {
      ++b.changed;
    }
  }
  return out;
}

std::vector<int> ParseBucketEdges(std::string_view text) {
  std::vector<int> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string part(text.substr(start, comma - start));
    try {
      size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size() || v < 0) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidArgument("bad bucket edge '" + part + "'");
    }
    start = comma + 1;
  }
  CheckEdges(out);
  return out;
}

MetricsReport BuildReport(const std::vector<PredictionPair>& pairs,
                          const std::vector<int>& edges) {
  if (pairs.empty()) throw EmptyInput("no prediction pairs");
  CheckEdges(edges);
  struct Acc {
    Breakdown breakdown;
    PrfAccumulator before;
    PrfAccumulator after;
    std::vector<LengthBucket> buckets;
  };
  std::map<std::pair<int, std::string>, Acc> groups;
  for (const PredictionPair& p : pairs) {
    Acc& acc = groups[{static_cast<int>(p.kind), p.label}];
    if (acc.buckets.empty()) acc.buckets = EmptyBuckets(edges);
    const ChangeCategory c = ClassifyPair(p);
    acc.breakdown.Add(c);
    acc.before.Add(p.pred_original, p.truth);
    acc.after.Add(p.pred_variant, p.truth);
    LengthBucket& b = acc.buckets[BucketIndex(edges, p.statement_count)];
    ++b.pairs;
    if (c == ChangeCategory::kCWP || c == ChangeCategory::kWCP ||
        c == ChangeCategory::kWWDP) {
      ++b.changed;
    }
  }
  MetricsReport report;
  for (auto& [key, acc] : groups) {
    GroupReport g;
    g.kind = static_cast<TransformKind>(key.first);
    g.label = key.second;
    g.breakdown = acc.breakdown;
    g.before = acc.before.Result();
    g.after = acc.after.Result();
    g.buckets = std::move(acc.buckets);
    report.groups.push_back(std::move(g));
  }
  return report;
}

namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string Percent(std::optional<double> v) {
  return v ? Fixed(*v, 2) : "n/a";
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void Row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string Render(TableFormat format) const {
    std::string out;
    if (format == TableFormat::kCsv) {
      Line(out, header_, ",", "", "");
      for (const auto& r : rows_) Line(out, r, ",", "", "");
      return out;
    }
    Line(out, header_, " | ", "| ", " |");
    std::vector<std::string> rule(header_.size(), "---");
    Line(out, rule, " | ", "| ", " |");
    for (const auto& r : rows_) Line(out, r, " | ", "| ", " |");
    return out;
  }

 private:
  static void Line(std::string& out, const std::vector<std::string>& cells,
                   const char* sep, const char* open, const char* close) {
    out += open;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += sep;
      out += cells[i];
    }
    out += close;
    out += '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace

std::string RenderPcpTable(const MetricsReport& report, TableFormat format) {
  Table t({"transformation", "mode", "pairs", "changed", "pcp"});
  for (const GroupReport& g : report.groups) {
    const Breakdown& b = g.breakdown;
    t.Row({std::string(ToString(g.kind)), g.label, std::to_string(b.total),
           std::to_string(b.count(ChangeCategory::kCWP) +
                          b.count(ChangeCategory::kWCP) +
                          b.count(ChangeCategory::kWWDP)),
           Fixed(b.Pcp(), 2)});
  }
  return t.Render(format);
}

std::string RenderBreakdownTable(const MetricsReport& report,
                                 TableFormat format) {
  std::vector<std::string> header = {"transformation", "mode", "pairs"};
  for (ChangeCategory c : kAllCategories) {
    header.push_back(std::string(ToString(c)));
    header.push_back(std::string(ToString(c)) + "_pct");
  }
  header.push_back("correct_to_wrong_pct");
  header.push_back("wrong_to_correct_pct");
  Table t(header);
  for (const GroupReport& g : report.groups) {
    const Breakdown& b = g.breakdown;
    std::vector<std::string> row = {std::string(ToString(g.kind)), g.label,
                                    std::to_string(b.total)};
    for (ChangeCategory c : kAllCategories) {
      row.push_back(std::to_string(b.count(c)));
      row.push_back(Fixed(100.0 * static_cast<double>(b.count(c)) /
                              static_cast<double>(b.total),
                          2));
    }
    row.push_back(Percent(b.CorrectToWrong()));
    row.push_back(Percent(b.WrongToCorrect()));
    t.Row(row);
  }
  return t.Render(format);
}

std::string RenderPrfTable(const MetricsReport& report, TableFormat format) {
  Table t({"transformation", "mode", "precision_before", "recall_before",
           "f1_before", "precision_after", "recall_after", "f1_after"});
  for (const GroupReport& g : report.groups) {
    t.Row({std::string(ToString(g.kind)), g.label, Fixed(g.before.precision, 4),
           Fixed(g.before.recall, 4), Fixed(g.before.f1, 4),
           Fixed(g.after.precision, 4), Fixed(g.after.recall, 4),
           Fixed(g.after.f1, 4)});
  }
  return t.Render(format);
}

std::string RenderLengthTable(const MetricsReport& report, TableFormat format) {
  Table t({"transformation", "mode", "statements", "pairs", "pcp"});
  for (const GroupReport& g : report.groups) {
    for (const LengthBucket& b : g.buckets) {
      t.Row({std::string(ToString(g.kind)), g.label, b.Label(),
             std::to_string(b.pairs), Percent(b.Pcp())});
    }
  }
  return t.Render(format);
}

std::vector<std::pair<std::string, std::string>> RenderReportFiles(
    const MetricsReport& report) {
  struct Spec {
    const char* stem;
    const char* title;
    std::string (*render)(const MetricsReport&, TableFormat);
  };
  const Spec specs[] = {
      {"pcp", "Prediction change percentage", RenderPcpTable},
      {"breakdown", "Change categories", RenderBreakdownTable},
      {"prf", "Subtoken precision, recall and F1", RenderPrfTable},
      {"length", "Prediction change by method length", RenderLengthTable},
  };
  std::vector<std::pair<std::string, std::string>> files;
  std::string combined = "# Generalizability report\n";
  for (const Spec& s : specs) {
    files.emplace_back(std::string(s.stem) + ".csv",
                       s.render(report, TableFormat::kCsv));
    const std::string md = s.render(report, TableFormat::kMarkdown);
    files.emplace_back(std::string(s.stem) + ".md", md);
    combined += std::string("\n## ") + s.title + "\n\n" + md;
  }
  files.emplace_back("report.md", combined);
  return files;
}

}  // namespace codemorph
