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

#include "ldmf/design_ir.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <unordered_set>

#include "ldmf/json_io.h"

namespace ldmf {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kFrame:
      return "frame";
    case NodeKind::kGroup:
      return "group";
    case NodeKind::kRect:
      return "rect";
    case NodeKind::kText:
      return "text";
    case NodeKind::kImage:
      return "image";
    case NodeKind::kVector:
      return "vector";
  }
  return "rect";
}

std::optional<NodeKind> ParseNodeKind(std::string_view name) {
  if (name == "frame") return NodeKind::kFrame;
  if (name == "group") return NodeKind::kGroup;
  if (name == "rect") return NodeKind::kRect;
  if (name == "text") return NodeKind::kText;
  if (name == "image") return NodeKind::kImage;
  if (name == "vector") return NodeKind::kVector;
  return std::nullopt;
}

namespace {

void CheckUniqueIds(const DesignNode& node, const std::string& path,
                    std::unordered_set<std::string>& seen) {
  if (!seen.insert(node.id).second) {
    throw Error(ErrorCode::kSchema, path, "duplicate node id '" + node.id + "'");
  }
  if (node.instance) {
    for (std::size_t i = 1; i < node.instance->nodes.size(); ++i) {
      const std::string& id = node.instance->nodes[i].id;
      if (!seen.insert(id).second) {
        throw Error(ErrorCode::kSchema,
                    path + ".instance.nodes[" + std::to_string(i) + "]",
                    "duplicate node id '" + id + "'");
      }
    }
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    CheckUniqueIds(node.children[i],
                   path + ".children[" + std::to_string(i) + "]", seen);
  }
}

}  // namespace

DesignDocument ParseDocument(std::string_view text) {
  Json json = ParseJsonText(text);
  const std::string root_path = "$";
  RequireObject(json, root_path);
  const Json& screens = RequireArray(json, "screens", root_path);
  DesignDocument doc;
  doc.screens.reserve(screens.size());
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < screens.size(); ++i) {
    std::string sp = "$.screens[" + std::to_string(i) + "]";
    Screen screen;
    screen.id = RequireString(screens[i], "id", sp);
    screen.name = RequireString(screens[i], "name", sp);
    screen.width = RequireNumber(screens[i], "width", sp);
    screen.height = RequireNumber(screens[i], "height", sp);
    screen.root = NodeFromJson(RequireField(screens[i], "root", sp),
                               sp + ".root");
    CheckUniqueIds(screen.root, sp + ".root", seen);
    doc.screens.push_back(std::move(screen));
  }
  return doc;
}

std::string SerializeDocument(const DesignDocument& doc) {
  Json screens = Json::array();
  for (const Screen& s : doc.screens) {
    Json sj = Json::object();
    sj["id"] = s.id;
    sj["name"] = s.name;
    sj["width"] = JsonNumber(s.width);
    sj["height"] = JsonNumber(s.height);
    sj["root"] = NodeToJson(s.root);
    screens.push_back(std::move(sj));
  }
  Json top = Json::object();
  top["screens"] = std::move(screens);
  return Dump(top);
}

namespace {

bool IsHexColor(const std::string& c) {
  if (c.size() != 7 || c[0] != '#') return false;
  return std::all_of(c.begin() + 1, c.end(), [](unsigned char ch) {
    return std::isxdigit(ch) != 0;
  });
}

bool Finite(const Rect& r) {
  return std::isfinite(r.x) && std::isfinite(r.y) && std::isfinite(r.w) &&
         std::isfinite(r.h);
}

class Validator {
 public:
  std::vector<Violation> Run(const DesignDocument& doc) {
    std::unordered_set<std::string> screen_ids;
    for (std::size_t i = 0; i < doc.screens.size(); ++i) {
      const Screen& s = doc.screens[i];
      std::string sp = "$.screens[" + std::to_string(i) + "]";
      if (!screen_ids.insert(s.id).second) {
        Add(sp, rules::kDuplicateScreenId, "screen id '" + s.id + "'");
      }
      Rect expected{0, 0, s.width, s.height};
      if (!(s.root.bounds == expected)) {
        Add(sp + ".root", rules::kRootBoundsMismatch,
            "root bounds must equal (0, 0, width, height)");
      }
      Visit(s.root, sp + ".root");
    }
    return std::move(out_);
  }

 private:
  void Add(const std::string& path, std::string_view rule,
           std::string detail) {
    out_.push_back(Violation{path, std::string(rule), std::move(detail)});
  }

  void CheckId(const std::string& id, const std::string& path) {
    if (id.empty()) Add(path, rules::kEmptyId, "node id is empty");
    if (!ids_.insert(id).second) {
      Add(path, rules::kDuplicateId, "duplicate node id '" + id + "'");
    }
  }

  void CheckRect(const Rect& r, const std::string& path, const std::string& id) {
    if (!Finite(r)) {
      Add(path, rules::kNonFinite, "non-finite geometry on '" + id + "'");
    } else if (r.w < 0 || r.h < 0) {
      Add(path, rules::kNegativeSize, "negative size on '" + id + "'");
    }
  }

  void CheckLayout(const AutoLayoutSpec& l, const std::string& path) {
    const Padding& p = l.padding;
    for (double v : {l.gap, p.top, p.right, p.bottom, p.left}) {
      if (!std::isfinite(v) || v < 0) {
        Add(path, rules::kNegativeLayout, "gap and padding must be >= 0");
        return;
      }
    }
  }

  void Visit(const DesignNode& n, const std::string& path) {
    CheckId(n.id, path);
    CheckRect(n.bounds, path, n.id);
    if (!IsContainerKind(n.kind) && !n.children.empty()) {
      Add(path, rules::kLeafKindHasChildren,
          std::string(NodeKindName(n.kind)) + " node '" + n.id +
              "' has children");
    }
    if ((n.kind == NodeKind::kText) != n.text.has_value()) {
      Add(path, rules::kTextPayloadMismatch,
          "text payload must be present iff kind is text");
    }
    if (n.text && (!std::isfinite(n.text->font_size) ||
                   n.text->font_size <= 0)) {
      Add(path + ".text", rules::kNegativeSize, "font size must be > 0");
    }
    if (n.fill) {
      if (!IsHexColor(n.fill->color)) {
        Add(path + ".fill", rules::kBadColor, "'" + n.fill->color + "'");
      }
      if (!(n.fill->opacity >= 0 && n.fill->opacity <= 1)) {
        Add(path + ".fill", rules::kOpacityRange, "opacity outside [0, 1]");
      }
    }
    if (n.stroke) {
      if (!IsHexColor(n.stroke->color)) {
        Add(path + ".stroke", rules::kBadColor, "'" + n.stroke->color + "'");
      }
      if (!(n.stroke->width >= 0) || !std::isfinite(n.stroke->width)) {
        Add(path + ".stroke", rules::kNegativeSize, "stroke width < 0");
      }
    }
    if (n.corner_radius &&
        (!(*n.corner_radius >= 0) || !std::isfinite(*n.corner_radius))) {
      Add(path, rules::kNegativeSize, "corner radius < 0");
    }
    if (n.layout) CheckLayout(*n.layout, path + ".layout");
    if (n.instance) {
      if (!n.children.empty()) {
        Add(path, rules::kInstanceHasChildren,
            "instance node '" + n.id + "' has children");
      }
      for (std::size_t i = 1; i < n.instance->nodes.size(); ++i) {
        const NodeOverlay& o = n.instance->nodes[i];
        std::string op = path + ".instance.nodes[" + std::to_string(i) + "]";
        CheckId(o.id, op);
        CheckRect(o.bounds, op, o.id);
        if (o.layout) CheckLayout(*o.layout, op + ".layout");
      }
    }
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      Visit(n.children[i], path + ".children[" + std::to_string(i) + "]");
    }
  }

  std::unordered_set<std::string> ids_;
  std::vector<Violation> out_;
};

void IndexInto(const DesignNode& node, std::size_t screen, NodeIndex& index) {
  if (!index.by_id.emplace(node.id, &node).second) {
    throw Error(ErrorCode::kDuplicateId, node.id,
                "node id '" + node.id + "' is not unique");
  }
  index.preorder.push_back(node.id);
  index.screen_of[node.id] = screen;
  for (const DesignNode& child : node.children) {
    index.parent_of[child.id] = node.id;
    IndexInto(child, screen, index);
  }
}

}  // namespace

std::vector<Violation> ValidateDocument(const DesignDocument& doc) {
  return Validator().Run(doc);
}

const DesignNode* NodeIndex::find(std::string_view id) const {
  auto it = by_id.find(std::string(id));
  return it == by_id.end() ? nullptr : it->second;
}

const DesignNode& NodeIndex::at(std::string_view id) const {
  const DesignNode* n = find(id);
  if (n == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, std::string(id), "unknown node id");
  }
  return *n;
}

const DesignNode* NodeIndex::parent(std::string_view id) const {
  auto it = parent_of.find(std::string(id));
  return it == parent_of.end() ? nullptr : find(it->second);
}

NodeIndex IndexNodes(const DesignDocument& doc) {
  NodeIndex index;
  for (std::size_t i = 0; i < doc.screens.size(); ++i) {
    IndexInto(doc.screens[i].root, i, index);
  }
  return index;
}

std::size_t CountNodes(const DesignNode& node) {
  std::size_t n = 1;
  for (const DesignNode& c : node.children) n += CountNodes(c);
  return n;
}

int NestingDepth(const DesignNode& node) {
  int depth = 0;
  for (const DesignNode& c : node.children) {
    depth = std::max(depth, 1 + NestingDepth(c));
  }
  return depth;
}

bool IsLeaf(const DesignNode& node) {
  return node.children.empty() && !node.instance;
}

}  // namespace ldmf
