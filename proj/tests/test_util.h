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

// Small builders shared by the unit tests.

#ifndef LDMF_TESTS_TEST_UTIL_H_
#define LDMF_TESTS_TEST_UTIL_H_

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ldmf/design_ir.h"

namespace ldmf {

inline void PrintTo(const Rect& r, std::ostream* os) {
  *os << "Rect{" << r.x << ", " << r.y << ", " << r.w << ", " << r.h << "}";
}

inline void PrintTo(const Padding& p, std::ostream* os) {
  *os << "Padding{" << p.top << ", " << p.right << ", " << p.bottom << ", "
      << p.left << "}";
}

}  // namespace ldmf

namespace ldmf::testing {

inline DesignNode Node(NodeKind kind, std::string id, double x, double y,
                       double w, double h) {
  DesignNode n;
  n.id = id;
  n.name = std::move(id);
  n.kind = kind;
  n.bounds = Rect{x, y, w, h};
  return n;
}

inline DesignNode Box(std::string id, double x, double y, double w, double h) {
  return Node(NodeKind::kRect, std::move(id), x, y, w, h);
}

inline DesignNode Frame(std::string id, double x, double y, double w, double h,
                        std::vector<DesignNode> children = {}) {
  DesignNode n = Node(NodeKind::kFrame, std::move(id), x, y, w, h);
  n.children = std::move(children);
  return n;
}

inline DesignNode TextNode(std::string id, double x, double y, double w,
                           double h, std::string content,
                           double font_size = 16) {
  DesignNode n = Node(NodeKind::kText, std::move(id), x, y, w, h);
  n.text = TextPayload{std::move(content), font_size, 400, TextAlign::kLeft};
  return n;
}

inline DesignDocument OneScreen(DesignNode root) {
  Screen s;
  s.id = "s0";
  s.name = "Screen";
  s.width = root.bounds.w;
  s.height = root.bounds.h;
  s.root = std::move(root);
  DesignDocument doc;
  doc.screens.push_back(std::move(s));
  return doc;
}

// Leaves of `node` in preorder as (id, bounds).
inline std::vector<std::pair<std::string, Rect>> Leaves(const DesignNode& node) {
  std::vector<std::pair<std::string, Rect>> out;
  ForEachPreorder(node, [&](const DesignNode& n) {
    if (n.children.empty() && n.origin == NodeOrigin::kOriginal &&
        !n.instance) {
      out.emplace_back(n.id, n.bounds);
    }
  });
  return out;
}

}  // namespace ldmf::testing

#endif  // LDMF_TESTS_TEST_UTIL_H_
