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

#include "ldmf/evaluator.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ldmf/text_util.h"

namespace ldmf {

std::unordered_map<std::string, Rect> LayoutResult::ById() const {
  std::unordered_map<std::string, Rect> out;
  out.reserve(rects.size());
  for (const RenderedRect& r : rects) out.emplace(r.node_id, r.rect);
  return out;
}

namespace {

constexpr double kOverflowEpsilon = 1e-6;

struct Box {
  double w = 0;
  double h = 0;
};

bool IsFlow(const ElementNode& e) {
  return !e.layout || e.layout->position == Positioning::kFlow;
}

double MarginTop(const ElementNode& e) {
  return e.layout ? e.layout->margin_top : 0.0;
}
double MarginLeft(const ElementNode& e) {
  return e.layout ? e.layout->margin_left : 0.0;
}

class LayoutEngine {
 public:
  explicit LayoutEngine(LayoutResult& out) : out_(out) {}

  void Place(const ElementNode& e, double x, double y,
             const std::string* parent_id) {
    Box box = Measure(e);
    Rect rect{x, y, box.w, box.h};
    out_.rects.push_back({e.begin.node_id, rect, e.begin.synthesized});
    (void)parent_id;

    const FlexLayout* flex =
        e.layout && e.layout->flex ? &*e.layout->flex : nullptr;
    Padding pad = flex ? flex->padding : Padding{};
    Rect content{x + pad.left, y + pad.top, box.w - pad.left - pad.right,
                 box.h - pad.top - pad.bottom};

    double cursor = 0;
    bool first = true;
    for (const ElementNode& c : e.children) {
      Box cb = Measure(c);
      if (!IsFlow(c)) {
        Rect cr{x + c.layout->x, y + c.layout->y, cb.w, cb.h};
        CheckOverflow(c, e, cr, Rect{x, y, box.w, box.h});
        Place(c, cr.x, cr.y, &e.begin.node_id);
        continue;
      }
      double cx = 0;
      double cy = 0;
      Rect margin_box;
      if (flex != nullptr && flex->direction == Direction::kRow) {
        if (!first) cursor += flex->gap;
        cursor += MarginLeft(c);
        cx = content.x + cursor;
        cy = content.y + MarginTop(c);
        margin_box = {cx - MarginLeft(c), cy - MarginTop(c),
                      cb.w + MarginLeft(c), cb.h + MarginTop(c)};
        cursor += cb.w;
      } else {
        if (!first && flex != nullptr) cursor += flex->gap;
        cursor += MarginTop(c);
        cx = content.x + MarginLeft(c);
        cy = content.y + cursor;
        margin_box = {cx - MarginLeft(c), cy - MarginTop(c),
                      cb.w + MarginLeft(c), cb.h + MarginTop(c)};
        cursor += cb.h;
      }
      first = false;
      CheckOverflow(c, e, margin_box, content);
      Place(c, cx, cy, &e.begin.node_id);
    }
  }

 private:
  Box Measure(const ElementNode& e) {
    auto it = cache_.find(&e);
    if (it != cache_.end()) return it->second;
    Box box{e.style.width, e.style.height};
    if (e.layout && e.layout->flex && e.layout->flex->sizing == Sizing::kHug) {
      const FlexLayout& f = *e.layout->flex;
      bool row = f.direction == Direction::kRow;
      double main = 0;
      double cross = 0;
      int flow = 0;
      for (const ElementNode& c : e.children) {
        if (!IsFlow(c)) continue;
        Box cb = Measure(c);
        double lead = row ? MarginLeft(c) : MarginTop(c);
        double off = row ? MarginTop(c) : MarginLeft(c);
        main += lead + (row ? cb.w : cb.h);
        cross = std::max(cross, off + (row ? cb.h : cb.w));
        ++flow;
      }
      if (flow > 1) main += f.gap * (flow - 1);
      const Padding& p = f.padding;
      if (row) {
        box = {p.left + main + p.right, p.top + cross + p.bottom};
      } else {
        box = {p.left + cross + p.right, p.top + main + p.bottom};
      }
    }
    cache_.emplace(&e, box);
    return box;
  }

  void CheckOverflow(const ElementNode& child, const ElementNode& parent,
                     const Rect& r, const Rect& limit) {
    if (r.x < limit.x - kOverflowEpsilon || r.y < limit.y - kOverflowEpsilon ||
        r.right() > limit.right() + kOverflowEpsilon ||
        r.bottom() > limit.bottom() + kOverflowEpsilon) {
      out_.overflows.push_back({child.begin.node_id, parent.begin.node_id});
    }
  }

  LayoutResult& out_;
  std::unordered_map<const ElementNode*, Box> cache_;
};

}  // namespace

LayoutResult ComputeLayout(const std::vector<ElementNode>& roots,
                           Viewport viewport) {
  LayoutResult result;
  LayoutEngine engine(result);
  for (const ElementNode& root : roots) {
    std::size_t first = result.rects.size();
    engine.Place(root, 0, 0, nullptr);
    const Rect& r = result.rects[first].rect;
    if (r.w > viewport.w + kOverflowEpsilon ||
        r.h > viewport.h + kOverflowEpsilon) {
      result.viewport_overflows.push_back(root.begin.node_id);
    }
  }
  return result;
}

LayoutResult ComputeLayout(const std::vector<Instruction>& instructions,
                           const std::vector<Instruction>& components,
                           Viewport viewport) {
  return ComputeLayout(BuildElementTrees(instructions, components), viewport);
}

namespace {

// Returns the error measure and whether it is within tolerance.
std::pair<double, bool> AttributeError(double original, double rendered,
                                       double threshold) {
  double diff = std::fabs(original - rendered);
  if (std::fabs(original) < kAbsoluteFallbackPx) {
    return {diff, diff <= kAbsoluteFallbackPx};
  }
  double rel = diff / std::fabs(original);
  return {rel, rel <= threshold};
}

}  // namespace

bool NodeMatch(const Rect& original, const Rect& rendered, double threshold) {
  return AttributeError(original.x, rendered.x, threshold).second &&
         AttributeError(original.y, rendered.y, threshold).second &&
         AttributeError(original.w, rendered.w, threshold).second &&
         AttributeError(original.h, rendered.h, threshold).second;
}

ScreenScore PreviewMatchScore(
    std::string screen_id,
    const std::vector<std::pair<std::string, Rect>>& originals,
    const std::unordered_map<std::string, Rect>& rendered, double threshold) {
  if (originals.empty()) {
    throw Error(ErrorCode::kEmptyScreen, screen_id,
                "screen has no original nodes to score");
  }
  ScreenScore score;
  score.screen_id = std::move(screen_id);
  score.n = static_cast<int>(originals.size());
  for (const auto& [id, orig] : originals) {
    auto it = rendered.find(id);
    if (it == rendered.end()) {
      score.failures.push_back({id, "missing", 0, std::nullopt, std::nullopt});
      continue;
    }
    const Rect& rend = it->second;
    const std::array<std::pair<const char*, std::pair<double, double>>, 4>
        attrs = {{{"x", {orig.x, rend.x}},
                  {"y", {orig.y, rend.y}},
                  {"w", {orig.w, rend.w}},
                  {"h", {orig.h, rend.h}}}};
    bool ok = true;
    for (const auto& [name, values] : attrs) {
      auto [err, within] = AttributeError(values.first, values.second, threshold);
      if (!within) {
        ok = false;
        score.failures.push_back(
            {id, name, values.first, values.second, err});
      }
    }
    if (ok) ++score.m;
  }
  score.pms = 100.0 * score.m / score.n;
  return score;
}

std::size_t BucketFor(double pms) {
  if (!(pms > 0)) return 0;
  auto k = static_cast<std::size_t>(std::floor(pms / 5.0));
  return std::min(k, kHistogramBuckets - 1);
}

PmsSummary PmsDistribution(std::span<const double> scores) {
  if (scores.empty()) {
    throw Error(ErrorCode::kEmptyList, "", "no scores to summarize");
  }
  PmsSummary s;
  s.count = scores.size();
  std::size_t above = 0;
  double total = 0;
  for (double v : scores) {
    total += v;
    if (v > 95.0) ++above;
    ++s.histogram[BucketFor(v)];
  }
  s.mean_pms = total / static_cast<double>(s.count);
  s.frac_above95 = static_cast<double>(above) / static_cast<double>(s.count);
  return s;
}

PmsReport MakePmsReport(std::vector<ScreenScore> per_screen) {
  PmsReport report;
  std::vector<double> scores;
  scores.reserve(per_screen.size());
  for (const ScreenScore& s : per_screen) scores.push_back(s.pms);
  report.summary = PmsDistribution(scores);
  report.per_screen = std::move(per_screen);
  return report;
}

namespace {

Json OptionalNumber(const std::optional<double>& v) {
  return v ? JsonNumber(*v) : Json(nullptr);
}

std::string Fixed(double v, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

}  // namespace

Json PmsReportToJson(const PmsReport& report, double threshold) {
  Json j = Json::object();
  j["threshold"] = JsonNumber(threshold);
  Json screens = Json::array();
  for (const ScreenScore& s : report.per_screen) {
    Json sj = Json::object();
    sj["screenId"] = s.screen_id;
    sj["N"] = s.n;
    sj["M"] = s.m;
    sj["pms"] = JsonNumber(s.pms);
    Json failures = Json::array();
    for (const MatchFailure& f : s.failures) {
      Json fj = Json::object();
      fj["nodeId"] = f.node_id;
      fj["attribute"] = f.attribute;
      fj["original"] = JsonNumber(f.original);
      fj["rendered"] = OptionalNumber(f.rendered);
      fj["relError"] = OptionalNumber(f.rel_error);
      failures.push_back(std::move(fj));
    }
    sj["failures"] = std::move(failures);
    screens.push_back(std::move(sj));
  }
  j["perScreen"] = std::move(screens);
  Json summary = Json::object();
  summary["count"] = report.summary.count;
  summary["meanPms"] = JsonNumber(report.summary.mean_pms);
  summary["fracAbove95"] = JsonNumber(report.summary.frac_above95);
  Json hist = Json::array();
  for (std::size_t k = 0; k < kHistogramBuckets; ++k) {
    hist.push_back({{"low", k * 5}, {"high", k * 5 + 5},
                    {"count", report.summary.histogram[k]}});
  }
  summary["histogram"] = std::move(hist);
  j["summary"] = std::move(summary);
  return j;
}

std::string PmsReportToMarkdown(const PmsReport& report, double threshold) {
  std::string md = "# Preview Match Score\n\n";
  md += "Threshold: " + FormatNumber(threshold) + "\n\n";
  md += "| Screen | N | M | PMS |\n|---|---:|---:|---:|\n";
  for (const ScreenScore& s : report.per_screen) {
    md += "| " + s.screen_id + " | " + std::to_string(s.n) + " | " +
          std::to_string(s.m) + " | " + Fixed(s.pms, 2) + " |\n";
  }
  md += "\n## Summary\n\n";
  md += "- Screens: " + std::to_string(report.summary.count) + "\n";
  md += "- Mean PMS: " + Fixed(report.summary.mean_pms, 2) + "\n";
  md += "- Share of screens with PMS > 95: " +
        Fixed(100.0 * report.summary.frac_above95, 2) + "%\n";
  return md;
}

std::string HistogramCsv(const PmsSummary& summary) {
  std::string csv = "bucket_low,bucket_high,count\n";
  for (std::size_t k = 0; k < kHistogramBuckets; ++k) {
    csv += std::to_string(k * 5) + "," + std::to_string(k * 5 + 5) + "," +
           std::to_string(summary.histogram[k]) + "\n";
  }
  return csv;
}

double MacroAverage(std::span<const double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyList, "", "macro average of an empty list");
  }
  double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                static_cast<double>(values.size());
  return std::round(mean * 100.0) / 100.0;
}

namespace {

std::map<std::string, TagLabel> ToMap(const TagList& list,
                                      std::string_view which) {
  std::map<std::string, TagLabel> m;
  for (const auto& [id, tag] : list) {
    if (!m.emplace(id, tag).second) {
      throw Error(ErrorCode::kIdMismatch, id,
                  "node listed twice in the " + std::string(which) + " labels");
    }
  }
  return m;
}

}  // namespace

TagEvalReport Prf1Scores(const TagList& pred, const TagList& gold) {
  std::map<std::string, TagLabel> p = ToMap(pred, "predicted");
  std::map<std::string, TagLabel> g = ToMap(gold, "gold");
  for (const auto& [id, tag] : p) {
    if (!g.contains(id)) {
      throw Error(ErrorCode::kIdMismatch, id, "predicted node has no gold label");
    }
  }
  for (const auto& [id, tag] : g) {
    if (!p.contains(id)) {
      throw Error(ErrorCode::kIdMismatch, id, "gold node has no prediction");
    }
  }
  std::array<TagMetrics, kTagCount> all{};
  for (TagLabel t : AllTags()) all[static_cast<std::size_t>(t)].tag = t;
  for (const auto& [id, gt] : g) {
    TagLabel pt = p.at(id);
    ++all[static_cast<std::size_t>(gt)].support;
    ++all[static_cast<std::size_t>(pt)].predicted;
    if (pt == gt) ++all[static_cast<std::size_t>(gt)].true_positives;
  }
  TagEvalReport report;
  std::vector<double> small;
  std::vector<double> big;
  for (TagMetrics& m : all) {
    if (m.support == 0 && m.predicted == 0) continue;
    m.precision = m.predicted > 0 ? 100.0 * m.true_positives / m.predicted : 0;
    m.recall = m.support > 0 ? 100.0 * m.true_positives / m.support : 0;
    m.f1 = m.precision + m.recall > 0
               ? 2 * m.precision * m.recall / (m.precision + m.recall)
               : 0;
    if (IsSmallTag(m.tag)) small.push_back(m.f1);
    if (IsBigTag(m.tag)) big.push_back(m.f1);
    report.per_tag.push_back(m);
  }
  if (!small.empty()) report.macro_small = MacroAverage(small);
  if (!big.empty()) report.macro_big = MacroAverage(big);
  return report;
}

Json TagListToJson(const TagList& tags) {
  Json arr = Json::array();
  for (const auto& [id, tag] : tags) {
    Json e = Json::object();
    e["nodeId"] = id;
    e["tag"] = TagName(tag);
    arr.push_back(std::move(e));
  }
  Json j = Json::object();
  j["tags"] = std::move(arr);
  return j;
}

TagList TagListFromJson(const Json& json) {
  TagList out;
  const Json& arr = RequireArray(json, "tags", "$");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string path = "$.tags[" + std::to_string(i) + "]";
    std::string name = RequireString(arr[i], "tag", path);
    auto tag = ParseTag(name);
    if (!tag) {
      throw Error(ErrorCode::kSchema, path + ".tag", "unknown tag '" + name + "'");
    }
    out.emplace_back(RequireString(arr[i], "nodeId", path), *tag);
  }
  return out;
}

Json TagEvalToJson(const TagEvalReport& report) {
  Json j = Json::object();
  Json per = Json::array();
  for (const TagMetrics& m : report.per_tag) {
    Json e = Json::object();
    e["tag"] = TagName(m.tag);
    e["support"] = m.support;
    e["predicted"] = m.predicted;
    e["truePositives"] = m.true_positives;
    e["precision"] = JsonNumber(m.precision);
    e["recall"] = JsonNumber(m.recall);
    e["f1"] = JsonNumber(m.f1);
    per.push_back(std::move(e));
  }
  j["perTag"] = std::move(per);
  j["macroSmall"] = OptionalNumber(report.macro_small);
  j["macroBig"] = OptionalNumber(report.macro_big);
  return j;
}

std::string TagEvalToMarkdown(const TagEvalReport& report) {
  std::string md = "# Tag evaluation\n\n";
  md += "| Tag | Support | Precision | Recall | F1 |\n|---|---:|---:|---:|---:|\n";
  for (const TagMetrics& m : report.per_tag) {
    md += "| " + std::string(TagName(m.tag)) + " | " +
          std::to_string(m.support) + " | " + Fixed(m.precision, 2) + " | " +
          Fixed(m.recall, 2) + " | " + Fixed(m.f1, 2) + " |\n";
  }
  auto macro = [](const std::optional<double>& v) {
    return v ? Fixed(*v, 2) : std::string("n/a");
  };
  md += "\nMacro F1, small tags: " + macro(report.macro_small) + "\n";
  md += "Macro F1, big tags: " + macro(report.macro_big) + "\n";
  return md;
}

}  // namespace ldmf
