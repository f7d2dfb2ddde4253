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

// Canonical design-document model: screens holding trees of layers with
// absolute geometry (origin top-left, child order = z-order, later on top).
//
// The same tree type carries the annotations added by later stages
// (auto-layout, positioning, origin, component instances) so that every
// stage consumes and produces a DesignDocument.

#ifndef LDMF_DESIGN_IR_H_
#define LDMF_DESIGN_IR_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ldmf/error.h"

namespace ldmf {

struct Rect {
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;

  double right() const { return x + w; }
  double bottom() const { return y + h; }
  bool operator==(const Rect&) const = default;
};

enum class NodeKind { kFrame, kGroup, kRect, kText, kImage, kVector };

std::string_view NodeKindName(NodeKind kind);
std::optional<NodeKind> ParseNodeKind(std::string_view name);
// Only frames and groups may hold children.
inline bool IsContainerKind(NodeKind kind) {
  return kind == NodeKind::kFrame || kind == NodeKind::kGroup;
}

struct Fill {
  std::string color;  // "#RRGGBB"
  double opacity = 1.0;
  bool operator==(const Fill&) const = default;
};

struct Stroke {
  std::string color;
  double width = 1.0;
  bool operator==(const Stroke&) const = default;
};

enum class TextAlign { kLeft, kCenter, kRight };

struct TextPayload {
  std::string content;
  double font_size = 16;
  int font_weight = 400;
  TextAlign align = TextAlign::kLeft;
  bool operator==(const TextPayload&) const = default;
};

enum class Direction { kRow, kColumn };
enum class Sizing { kFixed, kHug };
enum class Positioning { kFlow, kAbsolute };
enum class NodeOrigin { kOriginal, kSynthesized };

struct Padding {
  double top = 0;
  double right = 0;
  double bottom = 0;
  double left = 0;
  bool operator==(const Padding&) const = default;
};

// Flex-like container description. Cross-axis alignment is always "start";
// children that do not sit at the cross start carry an explicit offset.
struct AutoLayoutSpec {
  Direction direction = Direction::kColumn;
  double gap = 0;
  Padding padding;
  Sizing sizing = Sizing::kFixed;
  // One entry per flow child, main-axis space before the child (the first
  // entry is always 0). Empty when the gaps are uniform.
  std::vector<double> leading_margins;
  // One entry per flow child, offset from the cross-axis content start.
  // Empty when every child sits at the content start.
  std::vector<double> cross_offsets;
  bool operator==(const AutoLayoutSpec&) const = default;
};

// Per-node data an instance carries for every template node (template
// preorder) so that expansion reproduces the original subtree exactly.
struct NodeOverlay {
  std::string id;
  std::string name;
  Rect bounds;
  std::optional<AutoLayoutSpec> layout;
  bool operator==(const NodeOverlay&) const = default;
};

struct InstanceRef {
  std::string component_id;
  std::map<std::string, std::string> bindings;
  std::vector<NodeOverlay> nodes;
  bool operator==(const InstanceRef&) const = default;
};

struct DesignNode {
  std::string id;
  std::string name;
  NodeKind kind = NodeKind::kRect;
  Rect bounds;
  std::optional<Fill> fill;
  std::optional<double> corner_radius;
  std::optional<Stroke> stroke;
  std::optional<TextPayload> text;
  std::optional<std::string> image_ref;
  std::vector<DesignNode> children;

  // Added by the optimizer.
  std::optional<AutoLayoutSpec> layout;
  Positioning positioning = Positioning::kFlow;
  NodeOrigin origin = NodeOrigin::kOriginal;

  // Set on nodes replaced by a component instance; children are then empty.
  std::optional<InstanceRef> instance;

  bool operator==(const DesignNode&) const = default;
};

struct Screen {
  std::string id;
  std::string name;
  double width = 0;
  double height = 0;
  DesignNode root;
  bool operator==(const Screen&) const = default;
};

struct DesignDocument {
  std::vector<Screen> screens;
  bool operator==(const DesignDocument&) const = default;
};

// Parses the canonical design JSON. Unknown fields are ignored. Throws
// Error{kSyntax} for malformed text and Error{kSchema} for missing or
// mistyped fields and duplicate ids; the error path locates the element.
DesignDocument ParseDocument(std::string_view text);

// Canonical serialization: fixed key order, integral values written without
// a fraction, 2-space indentation, trailing newline.
std::string SerializeDocument(const DesignDocument& doc);

struct Violation {
  std::string path;
  std::string rule;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

namespace rules {
inline constexpr std::string_view kDuplicateId = "DUPLICATE_ID";
inline constexpr std::string_view kDuplicateScreenId = "DUPLICATE_SCREEN_ID";
inline constexpr std::string_view kLeafKindHasChildren = "LEAF_KIND_HAS_CHILDREN";
inline constexpr std::string_view kNegativeSize = "NEGATIVE_SIZE";
inline constexpr std::string_view kNonFinite = "NON_FINITE";
inline constexpr std::string_view kTextPayloadMismatch = "TEXT_PAYLOAD_MISMATCH";
inline constexpr std::string_view kRootBoundsMismatch = "ROOT_BOUNDS_MISMATCH";
inline constexpr std::string_view kBadColor = "BAD_COLOR";
inline constexpr std::string_view kOpacityRange = "OPACITY_RANGE";
inline constexpr std::string_view kEmptyId = "EMPTY_ID";
inline constexpr std::string_view kNegativeLayout = "NEGATIVE_LAYOUT";
inline constexpr std::string_view kInstanceHasChildren = "INSTANCE_HAS_CHILDREN";
}  // namespace rules

// Checks every type invariant; returns violations in document order.
std::vector<Violation> ValidateDocument(const DesignDocument& doc);

// Id lookup over a document. Pointers refer into the indexed document, which
// must outlive the index.
struct NodeIndex {
  std::unordered_map<std::string, const DesignNode*> by_id;
  // Stable pre-order across screens: parent before children, children in
  // stored order.
  std::vector<std::string> preorder;
  std::unordered_map<std::string, std::string> parent_of;
  std::unordered_map<std::string, std::size_t> screen_of;

  const DesignNode& at(std::string_view id) const;
  const DesignNode* find(std::string_view id) const;
  const DesignNode* parent(std::string_view id) const;
};

// Throws Error{kDuplicateId} if two nodes share an id.
NodeIndex IndexNodes(const DesignDocument& doc);

// Tree helpers.
std::size_t CountNodes(const DesignNode& node);
// Number of edges on the longest root-to-node path (a lone root has 0).
int NestingDepth(const DesignNode& node);
bool IsLeaf(const DesignNode& node);

template <typename Fn>
void ForEachPreorder(const DesignNode& node, Fn&& fn) {
  fn(node);
  for (const DesignNode& child : node.children) ForEachPreorder(child, fn);
}

template <typename Fn>
void ForEachPreorderMutable(DesignNode& node, Fn&& fn) {
  fn(node);
  for (DesignNode& child : node.children) ForEachPreorderMutable(child, fn);
}

}  // namespace ldmf

#endif  // LDMF_DESIGN_IR_H_
