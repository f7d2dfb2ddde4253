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

// UI-semantic tagging: per-node feature extraction, a pluggable classifier
// (default: the rule table documented in docs/tagging_rules.md) and
// composite ("big tag") detection over grouped subtrees.

#ifndef LDMF_TAGGER_H_
#define LDMF_TAGGER_H_

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ldmf/design_ir.h"
#include "ldmf/tags.h"

namespace ldmf {

struct FeatureVector {
  NodeKind kind = NodeKind::kRect;
  double width_px = 0;
  double height_px = 0;
  double aspect_ratio = 0;  // width / height, 0 when height is 0
  double corner_radius_px = 0;
  bool has_fill = false;
  bool has_stroke = false;
  int child_count = 0;
  bool single_text_child = false;
  // Own text length for text nodes, the child's for single-text-child
  // containers, else 0.
  int text_length = 0;
  std::vector<std::string> name_tokens;
  // Siblings with the same kind and size.
  int sibling_repeat_count = 0;

  int text_child_count = 0;
  int vector_child_count = 0;
  bool has_circle_child = false;
};

struct FeatureOptions {
  // Off zeroes name tokens, approximating vision-only conditions.
  bool use_names = true;
};

FeatureVector ExtractFeatures(const DesignNode& node, const NodeIndex& ctx,
                              const FeatureOptions& options = {});

using TagScores = std::array<double, kTagCount>;

class ClassifierBackend {
 public:
  virtual ~ClassifierBackend() = default;
  // Scores in [0, 1] indexed by TagLabel. Must be deterministic and safe
  // for concurrent calls.
  virtual TagScores Classify(const FeatureVector& fv) const = 0;
};

class RuleTableBackend : public ClassifierBackend {
 public:
  TagScores Classify(const FeatureVector& fv) const override;
};

// Argmax of the backend scores; ties go to the earliest tag in taxonomy
// order. Confidence is the winning score clamped to [0, 1].
TagAssignment ClassifyNode(const FeatureVector& fv,
                           const ClassifierBackend& backend);

struct ScreenSize {
  double width = 0;
  double height = 0;
};

// Containers in `subtree` (preorder) that form a grid, drawer, slider or
// quantity selector. `tags` supplies the labels used for fingerprints.
std::vector<std::pair<std::string, TagLabel>> DetectComposites(
    const DesignNode& subtree, const TagMap& tags, ScreenSize screen);

struct TaggingOptions {
  FeatureOptions features;
};

// One label per node. Composite detections replace neutral container
// labels only.
TagMap TagDocument(const DesignDocument& doc, const ClassifierBackend& backend,
                   const TaggingOptions& options = {});

}  // namespace ldmf

#endif  // LDMF_TAGGER_H_
