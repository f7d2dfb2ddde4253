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

// Repeated-subtree detection and component extraction.
//
// Subtrees are compared by a canonical form that keeps structure and style
// but drops ids, names, geometry, text content, image refs and fill colors.
// Equal forms become one ComponentDef; attributes that differ between the
// aligned instances become props.

#ifndef LDMF_COMPONENTIZER_H_
#define LDMF_COMPONENTIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ldmf/design_ir.h"
#include "ldmf/hash.h"
#include "ldmf/tags.h"

namespace ldmf {

using Fingerprint = Digest128;

std::string CanonicalForm(const DesignNode& node, const TagMap& tags);
Fingerprint FingerprintSubtree(const DesignNode& node, const TagMap& tags);

struct RepeatOptions {
  std::size_t min_nodes = 3;
  std::size_t min_instances = 2;
};

struct RepeatCandidate {
  Fingerprint fingerprint;
  std::size_t subtree_size = 0;
  // Document preorder.
  std::vector<std::string> instance_ids;
};

// Candidates ordered by (subtree size desc, first preorder occurrence).
// Instances inside a subtree already claimed by an earlier candidate are
// dropped; a candidate left with fewer than min_instances is discarded.
std::vector<RepeatCandidate> DetectRepeats(const DesignDocument& doc,
                                           const TagMap& tags,
                                           const RepeatOptions& options = {});

enum class PropKind { kText, kImageRef, kFillColor };
std::string_view PropKindName(PropKind kind);

// Child-index path from the template root, rendered as "0.2.1" ("" = root).
using NodePath = std::vector<std::size_t>;
std::string PathString(const NodePath& path);

struct PropDef {
  std::string name;
  PropKind kind;
  NodePath path;
  bool operator==(const PropDef&) const = default;
};

struct ComponentDef {
  std::string component_id;
  // First instance with ids rewritten to TemplateNodeId() and geometry
  // translated so that the root sits at (0, 0).
  DesignNode template_root;
  std::vector<PropDef> props;
  // Tags of the template nodes, keyed by template node id.
  TagMap tags;
};

std::string TemplateNodeId(std::string_view component_id,
                           const NodePath& path);

// Aligns the instances node by node and turns differing text, image refs
// and fill colors into props. Throws Error{kAlignment} if the instances are
// not structurally aligned.
ComponentDef InferProps(const std::vector<const DesignNode*>& instances,
                        const TagMap& tags, std::string component_id);

struct ComponentizeResult {
  DesignDocument doc;
  std::vector<ComponentDef> defs;
};

ComponentizeResult Componentize(const DesignDocument& doc, const TagMap& tags,
                                const RepeatOptions& options = {});

// Inverse of Componentize. Throws Error{kUnknownComponent} or
// Error{kMissingBinding}.
DesignDocument ExpandComponents(const DesignDocument& doc,
                                const std::vector<ComponentDef>& defs);

// Expands a single instance node.
DesignNode ExpandInstance(const DesignNode& instance_node,
                          const ComponentDef& def);

// Looks up a node by path; nullptr when the path leaves the tree.
const DesignNode* NodeAtPath(const DesignNode& root, const NodePath& path);

}  // namespace ldmf

#endif  // LDMF_COMPONENTIZER_H_
