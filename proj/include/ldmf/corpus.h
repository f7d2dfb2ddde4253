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

// Seeded synthetic corpus: well-structured designs with gold tags and a
// planted repeated card list, plus a de-optimizer that turns them into the
// flat, unordered layer soups the optimizer has to repair.

#ifndef LDMF_CORPUS_H_
#define LDMF_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ldmf/design_ir.h"
#include "ldmf/evaluator.h"
#include "ldmf/json_io.h"

namespace ldmf {

struct CorpusSpec {
  std::size_t count = 1;
  std::uint64_t seed = 42;
  int depth_min = 2;
  int depth_max = 7;
  int children_min = 2;
  int children_max = 6;
  int repeat_min = 2;
  int repeat_max = 6;
  Viewport viewport;
};

// Throws Error{kInvalidArgument} for empty ranges or depths outside [1, 10].
void ValidateSpec(const CorpusSpec& spec);

struct GoldComponents {
  std::size_t def_count = 0;
  std::vector<std::size_t> instance_counts;
};

struct GroundTruthPair {
  std::string name;
  DesignDocument optimized;
  DesignDocument deoptimized;
  // Every node of `optimized`, preorder.
  TagList gold_tags;
  GoldComponents gold_components;
};

// Per-item seed derived from a base seed (splitmix64 of seed + index).
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t index);

// Design `index` of the corpus; independent of every other index.
GroundTruthPair GenerateDesign(const CorpusSpec& spec, std::size_t index);

// Designs 0..count-1 in order. The parallel version splits indices over
// OpenMP threads; both return identical results.
std::vector<GroundTruthPair> GenCorpus(const CorpusSpec& spec);
std::vector<GroundTruthPair> GenCorpusSerial(const CorpusSpec& spec);

// Dissolves containers without paint (fill or stroke), moving their
// children up to the nearest kept ancestor with bounds unchanged; shuffles
// children of containers whose children are pairwise disjoint; drops all
// layout annotations. Leaf ids and bounds are preserved exactly.
DesignDocument Deoptimize(const DesignDocument& doc, std::uint64_t seed);

// Gold tags restricted to the ids present in `doc`, in its preorder.
TagList GoldTagsFor(const DesignDocument& doc, const TagList& gold);

Json GoldComponentsToJson(const GoldComponents& gold);

}  // namespace ldmf

#endif  // LDMF_CORPUS_H_
