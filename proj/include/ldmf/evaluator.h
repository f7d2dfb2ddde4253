// Copyright 2026 The ldmf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Fidelity scoring: a small flex-layout engine that computes where the
// emitted elements land, the Preview Match Score comparing those rects with
// the design, and precision/recall/F1 for tag predictions.

#ifndef LDMF_EVALUATOR_H_
#define LDMF_EVALUATOR_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ldmf/codegen.h"
#include "ldmf/design_ir.h"
#include "ldmf/json_io.h"
#include "ldmf/tags.h"

namespace ldmf {

inline constexpr double kDefaultThreshold = 0.03;
// Below this magnitude the relative test is replaced by an absolute one.
inline constexpr double kAbsoluteFallbackPx = 1.0;

struct Viewport {
  double w = 1440;
  double h = 900;
};

struct RenderedRect {
  std::string node_id;
  Rect rect;
  bool synthesized = false;
};

// A child whose margin box leaves its parent's content box.
struct LayoutOverflow {
  std::string node_id;
  std::string parent_id;
};

struct LayoutResult {
  // Preorder over the element trees.
  std::vector<RenderedRect> rects;
  std::vector<LayoutOverflow> overflows;
  // Roots wider or taller than the viewport.
  std::vector<std::string> viewport_overflows;

  std::unordered_map<std::string, Rect> ById() const;
};

// Roots are anchored at (0, 0). Flow children of a flex container are
// placed along the main axis after the padding, separated by the gap plus
// their own leading margin; the cross-axis position is the content start
// plus the cross margin. Flow children of a non-flex element stack
// vertically. Absolute children sit at their offsets from the parent's
// origin. Hug containers take their size from the flow content plus
// padding; every other element uses its SetStyle size.
LayoutResult ComputeLayout(const std::vector<ElementNode>& roots,
                           Viewport viewport = {});
LayoutResult ComputeLayout(const std::vector<Instruction>& instructions,
                           const std::vector<Instruction>& components,
                           Viewport viewport = {});

bool NodeMatch(const Rect& original, const Rect& rendered,
               double threshold = kDefaultThreshold);

struct MatchFailure {
  std::string node_id;
  std::string attribute;  // "x", "y", "w", "h", or "missing"
  double original = 0;
  std::optional<double> rendered;
  // Relative error, or the absolute error in px under the fallback.
  std::optional<double> rel_error;
};

struct ScreenScore {
  std::string screen_id;
  int n = 0;
  int m = 0;
  double pms = 0;
  std::vector<MatchFailure> failures;
};

// `originals` lists the original-design nodes in order. Throws
// Error{kEmptyScreen} when it is empty.
ScreenScore PreviewMatchScore(
    std::string screen_id,
    const std::vector<std::pair<std::string, Rect>>& originals,
    const std::unordered_map<std::string, Rect>& rendered,
    double threshold = kDefaultThreshold);

inline constexpr std::size_t kHistogramBuckets = 20;

struct PmsSummary {
  std::size_t count = 0;
  double mean_pms = 0;
  double frac_above95 = 0;  // strictly greater than 95
  // Bucket k covers [5k, 5k + 5); the last bucket also holds 100.
  std::array<std::size_t, kHistogramBuckets> histogram{};
};

std::size_t BucketFor(double pms);

// Throws Error{kEmptyList} for an empty input.
PmsSummary PmsDistribution(std::span<const double> scores);

struct PmsReport {
  std::vector<ScreenScore> per_screen;
  PmsSummary summary;
};

PmsReport MakePmsReport(std::vector<ScreenScore> per_screen);
Json PmsReportToJson(const PmsReport& report, double threshold);
std::string PmsReportToMarkdown(const PmsReport& report, double threshold);
std::string HistogramCsv(const PmsSummary& summary);

struct TagMetrics {
  TagLabel tag = TagLabel::kContainer;
  int support = 0;  // gold count
  int predicted = 0;
  int true_positives = 0;
  double precision = 0;  // percent
  double recall = 0;     // percent
  double f1 = 0;         // percent
};

struct TagEvalReport {
  // Tags that occur in the gold or predicted labels, in taxonomy order.
  std::vector<TagMetrics> per_tag;
  // Macro F1 over the small and big tags present; empty when none are.
  std::optional<double> macro_small;
  std::optional<double> macro_big;
};

using TagList = std::vector<std::pair<std::string, TagLabel>>;

// One-vs-rest scores per tag. Throws Error{kIdMismatch} unless `pred` and
// `gold` cover the same node ids, each exactly once.
TagEvalReport Prf1Scores(const TagList& pred, const TagList& gold);

// Unweighted mean rounded to 2 decimals. Throws Error{kEmptyList}.
double MacroAverage(std::span<const double> values);

// {"tags": [{"nodeId": ..., "tag": ...}, ...]}
Json TagListToJson(const TagList& tags);
TagList TagListFromJson(const Json& json);

Json TagEvalToJson(const TagEvalReport& report);
std::string TagEvalToMarkdown(const TagEvalReport& report);

}  // namespace ldmf

#endif  // LDMF_EVALUATOR_H_
