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
// Seeded random design documents for invariant checks. Geometry is
// arbitrary: children may overlap and stick out of their parents. About
// half the documents carry shifted copies of one subtree so that repeats
// exist.

#ifndef LDMF_TESTS_RANDOM_DOCS_H_
#define LDMF_TESTS_RANDOM_DOCS_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "ldmf/design_ir.h"
#include "test_util.h"

namespace ldmf::testing {

class RandomDocs {
 public:
  explicit RandomDocs(std::uint64_t seed) : rng_(seed) {}

  DesignDocument Next() {
    next_id_ = 0;
    double w = Int(200, 1200);
    double h = Int(200, 900);
    DesignNode root = Container(0, 0, w, h, Int(1, 4));
    if (Int(0, 1) == 1 && !root.children.empty()) PlantCopies(root);
    DesignDocument doc = OneScreen(std::move(root));
    doc.screens[0].height = doc.screens[0].root.bounds.h;
    return doc;
  }

 private:
  int Int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  std::string Id() { return "n" + std::to_string(next_id_++); }

  DesignNode Container(double x, double y, double w, double h, int depth) {
    DesignNode n = Frame(Id(), x, y, w, h);
    if (Int(0, 2) == 0) n.fill = Fill{"#EEEEEE", 1};
    int kids = depth > 0 ? Int(0, 7) : 0;
    for (int i = 0; i < kids; ++i) {
      double cw = Int(1, std::max(1, static_cast<int>(w)));
      double ch = Int(1, std::max(1, static_cast<int>(h)));
      // Children sometimes stick out of the parent.
      double cx = x + Int(-5, std::max(0, static_cast<int>(w - cw) + 5));
      double cy = y + Int(-5, std::max(0, static_cast<int>(h - ch) + 5));
      switch (Int(0, 4)) {
        case 0:
          n.children.push_back(Container(cx, cy, cw, ch, depth - 1));
          break;
        case 1:
          n.children.push_back(
              TextNode(Id(), cx, cy, cw, ch, "t" + std::to_string(i)));
          break;
        default: {
          DesignNode b = Box(Id(), cx, cy, cw, ch);
          if (Int(0, 1) == 1) b.stroke = Stroke{"#333333", 1};
          if (Int(0, 1) == 1) b.corner_radius = Int(0, 12);
          n.children.push_back(std::move(b));
        }
      }
    }
    return n;
  }

  // Appends shifted copies of a frame child so that repeats exist.
  void PlantCopies(DesignNode& root) {
    DesignNode card = Container(0, 0, 80, 60, 2);
    if (card.children.empty()) {
      card.children.push_back(TextNode(Id(), 4, 4, 40, 16, "a"));
    }
    int copies = Int(2, 4);
    for (int k = 0; k < copies; ++k) {
      DesignNode c = card;
      double dx = 90.0 * k;
      double dy = root.bounds.h + 10;
      int variant = k;
      ForEachPreorderMutable(c, [&](DesignNode& n) {
        n.id += "_c" + std::to_string(k);
        n.bounds.x += dx;
        n.bounds.y += dy;
        if (n.text) n.text->content += std::to_string(variant);
      });
      root.children.push_back(std::move(c));
    }
    root.bounds.h += 80;
  }

  std::mt19937_64 rng_;
  int next_id_ = 0;
};

}  // namespace ldmf::testing

#endif  // LDMF_TESTS_RANDOM_DOCS_H_
