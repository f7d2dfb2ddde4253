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
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace ldmf {
namespace {

Instruction Begin(const std::string& id) {
  return {BeginElement{id, "container", "div", id + "-000000", false}};
}
Instruction Style(double w, double h) { return {SetStyle{w, h}}; }
Instruction End() { return {EndElement{}}; }

Instruction Flex(Direction d, double gap, double pad) {
  SetLayout l;
  l.flex = FlexLayout{d, gap, Padding{pad, pad, pad, pad}, Sizing::kFixed};
  return {l};
}

Instruction Absolute(double x, double y) {
  SetLayout l;
  l.position = Positioning::kAbsolute;
  l.x = x;
  l.y = y;
  return {l};
}

void Leaf(std::vector<Instruction>& ops, const std::string& id, double w,
          double h) {
  ops.push_back(Begin(id));
  ops.push_back(Style(w, h));
  ops.push_back(End());
}

TEST(ComputeLayoutTest, RowWithPaddingAndGap) {
  std::vector<Instruction> ops = {Begin("row"), Flex(Direction::kRow, 10, 10),
                                  Style(400, 70)};
  for (const char* id : {"a", "b", "c"}) Leaf(ops, id, 100, 50);
  ops.push_back(End());
  auto rects = ComputeLayout(ops, {}).ById();
  EXPECT_EQ(rects.at("a"), (Rect{10, 10, 100, 50}));
  EXPECT_EQ(rects.at("b"), (Rect{120, 10, 100, 50}));
  EXPECT_EQ(rects.at("c"), (Rect{230, 10, 100, 50}));
}

TEST(ComputeLayoutTest, AbsoluteChildIsOffsetFromParent) {
  std::vector<Instruction> ops = {Begin("root"), Style(500, 500),
                                  Begin("p"),    Absolute(100, 100),
                                  Style(200, 200), Begin("c"),
                                  Absolute(5, 7), Style(10, 10),
                                  End(),         End(),
                                  End()};
  auto rects = ComputeLayout(ops, {}).ById();
  EXPECT_EQ(rects.at("c"), (Rect{105, 107, 10, 10}));
}

TEST(ComputeLayoutTest, EmptyContainerYieldsOnlyItself) {
  std::vector<Instruction> ops = {Begin("root"), Flex(Direction::kColumn, 0, 0),
                                  Style(300, 200), End()};
  LayoutResult r = ComputeLayout(ops, {});
  ASSERT_EQ(r.rects.size(), 1u);
  EXPECT_EQ(r.rects[0].rect, (Rect{0, 0, 300, 200}));
}

TEST(ComputeLayoutTest, ColumnMarginsAndCrossOffset) {
  SetLayout m;
  m.margin_top = 15;
  m.margin_left = 4;
  std::vector<Instruction> ops = {Begin("col"), Flex(Direction::kColumn, 5, 0),
                                  Style(100, 200)};
  Leaf(ops, "a", 50, 20);
  ops.push_back(Begin("b"));
  ops.push_back({m});
  ops.push_back(Style(50, 20));
  ops.push_back(End());
  ops.push_back(End());
  auto rects = ComputeLayout(ops, {}).ById();
  EXPECT_EQ(rects.at("b"), (Rect{4, 20 + 5 + 15, 50, 20}));
}

TEST(ComputeLayoutTest, HugContainerSizesToContent) {
  SetLayout l;
  l.flex = FlexLayout{Direction::kRow, 8, Padding{2, 3, 4, 5}, Sizing::kHug};
  std::vector<Instruction> ops = {Begin("h"), {l}, Style(1, 1)};
  Leaf(ops, "a", 30, 10);
  Leaf(ops, "b", 20, 16);
  ops.push_back(End());
  auto rects = ComputeLayout(ops, {}).ById();
  EXPECT_EQ(rects.at("h"), (Rect{0, 0, 5 + 30 + 8 + 20 + 3, 2 + 16 + 4}));
}

TEST(ComputeLayoutTest, OverflowIsReportedNotClipped) {
  std::vector<Instruction> ops = {Begin("row"), Flex(Direction::kRow, 0, 0),
                                  Style(100, 50)};
  Leaf(ops, "a", 80, 50);
  Leaf(ops, "b", 80, 50);
  ops.push_back(End());
  LayoutResult r = ComputeLayout(ops, {}, Viewport{50, 50});
  EXPECT_EQ(r.ById().at("b"), (Rect{80, 0, 80, 50}));
  ASSERT_EQ(r.overflows.size(), 1u);
  EXPECT_EQ(r.overflows[0].node_id, "b");
  EXPECT_EQ(r.viewport_overflows, (std::vector<std::string>{"row"}));
}

TEST(NodeMatchTest, RelativeAndFallback) {
  EXPECT_FALSE(NodeMatch(Rect{0, 0, 100, 10}, Rect{0, 0, 105, 10}));
  EXPECT_TRUE(NodeMatch(Rect{0, 0, 100, 10}, Rect{0, 0, 103, 10}));
  EXPECT_TRUE(NodeMatch(Rect{0, 0, 100, 10}, Rect{0.5, 0, 100, 10}));
  EXPECT_FALSE(NodeMatch(Rect{0, 0, 100, 10}, Rect{1.5, 0, 100, 10}));
  EXPECT_TRUE(NodeMatch(Rect{0.5, 0, 100, 10}, Rect{1.5, 0, 100, 10}));
}

TEST(NodeMatchTest, MonotoneInThreshold) {
  Rect a{100, 200, 300, 40};
  Rect b{104, 203, 290, 41};
  bool prev = false;
  for (double t = 0; t <= 0.1; t += 0.005) {
    bool now = NodeMatch(a, b, t);
    EXPECT_TRUE(!prev || now) << t;
    prev = now;
  }
  EXPECT_TRUE(prev);
}

std::vector<std::pair<std::string, Rect>> Originals(int n) {
  std::vector<std::pair<std::string, Rect>> out;
  for (int i = 0; i < n; ++i) {
    out.emplace_back("n" + std::to_string(i), Rect{10.0 * i, 5, 50, 20});
  }
  return out;
}

std::unordered_map<std::string, Rect> Exact(
    const std::vector<std::pair<std::string, Rect>>& o) {
  return {o.begin(), o.end()};
}

TEST(PreviewMatchScoreTest, IdenticalIsHundred) {
  auto o = Originals(10);
  ScreenScore s = PreviewMatchScore("s", o, Exact(o));
  EXPECT_EQ(s.n, 10);
  EXPECT_EQ(s.m, 10);
  EXPECT_DOUBLE_EQ(s.pms, 100.0);
  EXPECT_TRUE(s.failures.empty());
}

TEST(PreviewMatchScoreTest, OneAttributeFivePercentOffOfFour) {
  auto o = Originals(4);
  auto r = Exact(o);
  r["n2"].w = 52.5;
  ScreenScore s = PreviewMatchScore("s", o, r);
  EXPECT_EQ(s.m, 3);
  EXPECT_DOUBLE_EQ(s.pms, 75.0);
  ASSERT_EQ(s.failures.size(), 1u);
  EXPECT_EQ(s.failures[0].node_id, "n2");
  EXPECT_EQ(s.failures[0].attribute, "w");
  EXPECT_NEAR(*s.failures[0].rel_error, 0.05, 1e-12);
}

TEST(PreviewMatchScoreTest, MissingNodeIsUnmatched) {
  auto o = Originals(5);
  auto r = Exact(o);
  r.erase("n3");
  ScreenScore s = PreviewMatchScore("s", o, r);
  EXPECT_DOUBLE_EQ(s.pms, 80.0);
  EXPECT_EQ(s.failures[0].attribute, "missing");
}

TEST(PreviewMatchScoreTest, ZeroOriginalUsesAbsoluteFallback) {
  std::vector<std::pair<std::string, Rect>> o = {{"z", Rect{0, 0, 10, 10}}};
  std::unordered_map<std::string, Rect> r = {{"z", Rect{0.9, 0, 10, 10}}};
  EXPECT_DOUBLE_EQ(PreviewMatchScore("s", o, r).pms, 100.0);
  r["z"].x = 1.2;
  EXPECT_DOUBLE_EQ(PreviewMatchScore("s", o, r).pms, 0.0);
}

TEST(PreviewMatchScoreTest, EmptyScreenThrows) {
  try {
    PreviewMatchScore("s", {}, {});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyScreen);
  }
}

TEST(PmsDistributionTest, FractionAboveAndBuckets) {
  std::vector<double> scores = {96, 97, 80};
  PmsSummary s = PmsDistribution(scores);
  EXPECT_DOUBLE_EQ(s.frac_above95, 2.0 / 3.0);
  EXPECT_EQ(std::accumulate(s.histogram.begin(), s.histogram.end(),
                            std::size_t{0}),
            3u);
  EXPECT_EQ(s.histogram[16], 1u);
  EXPECT_EQ(s.histogram[19], 2u);
  EXPECT_NEAR(s.mean_pms, 91.0, 1e-12);
}

TEST(PmsDistributionTest, NinetyFiveIsNotAbove) {
  std::vector<double> scores = {95, 100};
  EXPECT_DOUBLE_EQ(PmsDistribution(scores).frac_above95, 0.5);
}

TEST(PmsDistributionTest, BucketEdges) {
  EXPECT_EQ(BucketFor(0), 0u);
  EXPECT_EQ(BucketFor(4.999), 0u);
  EXPECT_EQ(BucketFor(5), 1u);
  EXPECT_EQ(BucketFor(95), 19u);
  EXPECT_EQ(BucketFor(100), 19u);
}

TEST(PmsDistributionTest, EmptyThrows) {
  EXPECT_THROW(PmsDistribution({}), Error);
}

TEST(PmsReportTest, CsvHasHeaderAndTwentyRows) {
  std::vector<double> scores = {100};
  std::string csv = HistogramCsv(PmsDistribution(scores));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 21);
}

TEST(Prf1ScoresTest, HalfRecall) {
  TagList gold = {{"a", TagLabel::kButton}, {"b", TagLabel::kButton}};
  TagList pred = {{"a", TagLabel::kButton}, {"b", TagLabel::kContainer}};
  TagEvalReport r = Prf1Scores(pred, gold);
  const TagMetrics& button = r.per_tag.front();
  ASSERT_EQ(button.tag, TagLabel::kButton);
  EXPECT_DOUBLE_EQ(button.precision, 100.0);
  EXPECT_DOUBLE_EQ(button.recall, 50.0);
  EXPECT_NEAR(button.f1, 200.0 / 3.0, 1e-9);
  ASSERT_TRUE(r.macro_small.has_value());
  EXPECT_DOUBLE_EQ(*r.macro_small, 66.67);
  EXPECT_FALSE(r.macro_big.has_value());
}

TEST(Prf1ScoresTest, DisjointPredictionsScoreZero) {
  TagList gold = {{"a", TagLabel::kButton}, {"b", TagLabel::kButton}};
  TagList pred = {{"a", TagLabel::kInput}, {"b", TagLabel::kInput}};
  TagEvalReport r = Prf1Scores(pred, gold);
  for (const TagMetrics& m : r.per_tag) {
    EXPECT_EQ(m.precision, 0);
    EXPECT_EQ(m.recall, 0);
    EXPECT_EQ(m.f1, 0);
  }
  EXPECT_DOUBLE_EQ(*r.macro_small, 0.0);
}

TEST(Prf1ScoresTest, IdSetsMustMatch) {
  TagList gold = {{"a", TagLabel::kButton}};
  TagList pred = {{"b", TagLabel::kButton}};
  try {
    Prf1Scores(pred, gold);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIdMismatch);
  }
  TagList dup = {{"a", TagLabel::kButton}, {"a", TagLabel::kButton}};
  EXPECT_THROW(Prf1Scores(dup, gold), Error);
}

TEST(MacroAverageTest, RoundsToTwoDecimals) {
  std::vector<double> v = {100.0, 50.0, 0.0};
  EXPECT_DOUBLE_EQ(MacroAverage(v), 50.0);
  std::vector<double> w = {1.0, 2.0, 2.0};
  EXPECT_DOUBLE_EQ(MacroAverage(w), 1.67);
  EXPECT_THROW(MacroAverage({}), Error);
}

TEST(TagListJsonTest, RoundTrip) {
  TagList tags = {{"a", TagLabel::kButton}, {"b", TagLabel::kQuantitySelector}};
  EXPECT_EQ(TagListFromJson(TagListToJson(tags)), tags);
  Json bad = Json::parse(R"({"tags":[{"nodeId":"a","tag":"banana"}]})");
  EXPECT_THROW(TagListFromJson(bad), Error);
}

TEST(TagEvalJsonTest, AbsentMacroIsNull) {
  TagList gold = {{"a", TagLabel::kButton}};
  Json j = TagEvalToJson(Prf1Scores(gold, gold));
  EXPECT_TRUE(j.at("macroBig").is_null());
  EXPECT_EQ(j.at("macroSmall"), 100);
}

}  // namespace
}  // namespace ldmf
