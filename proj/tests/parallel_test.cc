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
// The OpenMP paths must agree exactly with their serial references.

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "ldmf/corpus.h"
#include "ldmf/pipeline.h"

namespace ldmf {
namespace {

CorpusSpec Spec() {
  CorpusSpec spec;
  spec.count = 24;
  spec.seed = 99;
  return spec;
}

void ExpectSameScores(const std::vector<ScreenScore>& a,
                      const std::vector<ScreenScore>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].screen_id, b[i].screen_id);
    EXPECT_EQ(a[i].n, b[i].n);
    EXPECT_EQ(a[i].m, b[i].m);
    EXPECT_EQ(a[i].pms, b[i].pms);
    EXPECT_EQ(a[i].failures.size(), b[i].failures.size());
  }
}

TEST(ParallelTest, GenCorpusMatchesSerial) {
  auto par = GenCorpus(Spec());
  auto ser = GenCorpusSerial(Spec());
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    EXPECT_EQ(par[i].name, ser[i].name);
    EXPECT_EQ(SerializeDocument(par[i].optimized),
              SerializeDocument(ser[i].optimized));
    EXPECT_EQ(SerializeDocument(par[i].deoptimized),
              SerializeDocument(ser[i].deoptimized));
    EXPECT_EQ(par[i].gold_tags, ser[i].gold_tags);
  }
}

TEST(ParallelTest, RunCorpusMatchesSerial) {
  std::vector<DesignDocument> designs;
  for (const GroundTruthPair& g : GenCorpus(Spec())) {
    designs.push_back(g.deoptimized);
  }
  auto par = RunCorpus(designs);
  auto ser = RunCorpusSerial(designs);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    ExpectSameScores(par[i].screens, ser[i].screens);
    EXPECT_EQ(par[i].predicted, ser[i].predicted);
    EXPECT_EQ(par[i].component_defs, ser[i].component_defs);
    EXPECT_EQ(par[i].instantiates, ser[i].instantiates);
    EXPECT_EQ(par[i].absolute_fallbacks, ser[i].absolute_fallbacks);
  }
}

TEST(ParallelTest, ScoreProgramMatchesSerial) {
  // Several screens in one document.
  DesignDocument doc;
  for (const GroundTruthPair& g : GenCorpus(Spec())) {
    Screen s = g.optimized.screens[0];
    s.id = "s" + std::to_string(doc.screens.size());
    ForEachPreorderMutable(s.root, [&](DesignNode& n) {
      n.id = s.id + ":" + n.id;
    });
    doc.screens.push_back(std::move(s));
  }
  InstructionProgram p = ConvertDocument(doc).program;
  PmsReport par = ScoreProgram(doc, p);
  PmsReport ser = ScoreProgramSerial(doc, p);
  ExpectSameScores(par.per_screen, ser.per_screen);
  EXPECT_EQ(par.summary.histogram, ser.summary.histogram);
  EXPECT_EQ(par.summary.mean_pms, ser.summary.mean_pms);
}

}  // namespace
}  // namespace ldmf
