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
// Serial reference vs. OpenMP kernels on a generated corpus.

#include <vector>

#include "benchmark/benchmark.h"
#include "ldmf/corpus.h"
#include "ldmf/pipeline.h"

namespace ldmf {
namespace {

CorpusSpec Spec(std::size_t count) {
  CorpusSpec spec;
  spec.count = count;
  spec.seed = 42;
  return spec;
}

std::vector<DesignDocument> Deoptimized(std::size_t count) {
  std::vector<DesignDocument> out;
  for (GroundTruthPair& g : GenCorpus(Spec(count))) {
    out.push_back(std::move(g.deoptimized));
  }
  return out;
}

void BM_GenCorpusSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(GenCorpusSerial(Spec(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenCorpusSerial)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_GenCorpusParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(GenCorpus(Spec(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenCorpusParallel)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_RunCorpusSerial(benchmark::State& state) {
  std::vector<DesignDocument> designs = Deoptimized(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunCorpusSerial(designs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunCorpusSerial)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_RunCorpusParallel(benchmark::State& state) {
  std::vector<DesignDocument> designs = Deoptimized(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunCorpus(designs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunCorpusParallel)->Arg(200)->Unit(benchmark::kMillisecond);

// One document with many screens exercises the per-screen scoring loop.
DesignDocument ManyScreens(std::size_t count) {
  DesignDocument doc;
  for (GroundTruthPair& g : GenCorpus(Spec(count))) {
    Screen s = std::move(g.optimized.screens[0]);
    s.id = "s" + std::to_string(doc.screens.size());
    ForEachPreorderMutable(s.root,
                           [&](DesignNode& n) { n.id = s.id + ":" + n.id; });
    doc.screens.push_back(std::move(s));
  }
  return doc;
}

void BM_ScoreProgram(benchmark::State& state) {
  DesignDocument doc = ManyScreens(200);
  InstructionProgram program = ConvertDocument(doc).program;
  for (auto _ : state) {
    if (state.range(0) == 0) {
      benchmark::DoNotOptimize(ScoreProgramSerial(doc, program));
    } else {
      benchmark::DoNotOptimize(ScoreProgram(doc, program));
    }
  }
}
BENCHMARK(BM_ScoreProgram)
    ->ArgName("parallel")
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ldmf

BENCHMARK_MAIN();
