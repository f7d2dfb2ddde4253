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

// Structural optimization of design trees: sub-optimal structure detection,
// recursive projection-cut grouping and auto-layout inference. Leaf geometry
// is never changed; only hierarchy and layout annotations are.

#ifndef LDMF_OPTIMIZER_H_
#define LDMF_OPTIMIZER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ldmf/design_ir.h"

namespace ldmf {

enum class FindingKind {
  // Many flow children, some of which share a projection band.
  kUngroupedSiblings,
  // Many flow children, all leaves, each in its own band.
  kFlatDeepList,
  // A flow sibling covering more than kOverlapFraction of an earlier one.
  kOverlappingLayers,
  // Two or more flow children that no projection cut separates.
  kAbsoluteOnly,
};

std::string_view FindingKindName(FindingKind kind);

struct Finding {
  std::string node_id;
  FindingKind kind;
  std::string detail;
  bool operator==(const Finding&) const = default;
};

// Containers with more than this many flow children are candidates for
// UNGROUPED_SIBLINGS / FLAT_DEEP_LIST.
inline constexpr std::size_t kUngroupedChildThreshold = 8;
// Overlap area, as a fraction of the smaller rect, that flags two siblings.
inline constexpr double kOverlapFraction = 0.10;
// Maximum deviation of any gap from the median for the gap to count as
// uniform.
inline constexpr double kGapTolerancePx = 1.0;

// Findings ordered by the preorder position of their node.
std::vector<Finding> DetectSuboptimal(const DesignDocument& doc);

enum class Axis { kX, kY };

// Connected components of the rects' projections on `axis`; two rects are
// connected iff their intervals overlap (touching does not count). Clusters
// are ordered by interval start; members keep input order.
std::vector<std::vector<std::size_t>> ProjectionClusters(
    std::span<const Rect> rects, Axis axis);

// Ids already present in a document; synthesized ids are drawn so as to
// stay disjoint from it.
using IdPool = std::unordered_set<std::string>;
IdPool CollectIds(const DesignDocument& doc);

// Regroups the flow children of `container` by recursive XY-cut. Clusters
// with more than one member become synthesized groups with id
// `g:<parentId>:<ordinal>`; each arranged container receives a provisional
// layout carrying only its direction. When neither axis splits two or more
// children they are marked absolute and the container gets no layout.
DesignNode GroupLayers(DesignNode container, IdPool& ids);

// Measures gap, padding and per-child offsets of `group`'s flow children,
// which must be sorted and non-overlapping along `direction` (else throws
// Error{kNonUniformAxis}).
AutoLayoutSpec InferAutoLayout(const DesignNode& group, Direction direction);

// Containment, then grouping, then auto-layout on every flow container.
DesignDocument OptimizeDocument(const DesignDocument& doc);

}  // namespace ldmf

#endif  // LDMF_OPTIMIZER_H_
