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

#include "ldmf/optimizer.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

namespace ldmf {

std::string_view FindingKindName(FindingKind kind) {
  switch (kind) {
    case FindingKind::kUngroupedSiblings:
      return "UNGROUPED_SIBLINGS";
    case FindingKind::kFlatDeepList:
      return "FLAT_DEEP_LIST";
    case FindingKind::kOverlappingLayers:
      return "OVERLAPPING_LAYERS";
    case FindingKind::kAbsoluteOnly:
      return "ABSOLUTE_ONLY";
  }
  return "UNKNOWN";
}

namespace {

struct Interval {
  double start;
  double end;
};

Interval Project(const Rect& r, Axis axis) {
  return axis == Axis::kX ? Interval{r.x, r.right()}
                          : Interval{r.y, r.bottom()};
}

double Area(const Rect& r) { return r.w * r.h; }

double IntersectionArea(const Rect& a, const Rect& b) {
  double w = std::min(a.right(), b.right()) - std::max(a.x, b.x);
  double h = std::min(a.bottom(), b.bottom()) - std::max(a.y, b.y);
  return (w > 0 && h > 0) ? w * h : 0.0;
}

bool Contains(const Rect& outer, const Rect& inner) {
  return inner.x >= outer.x && inner.y >= outer.y &&
         inner.right() <= outer.right() && inner.bottom() <= outer.bottom();
}

Rect UnionBounds(const std::vector<DesignNode>& nodes) {
  double x0 = nodes.front().bounds.x, y0 = nodes.front().bounds.y;
  double x1 = nodes.front().bounds.right(), y1 = nodes.front().bounds.bottom();
  for (const DesignNode& n : nodes) {
    x0 = std::min(x0, n.bounds.x);
    y0 = std::min(y0, n.bounds.y);
    x1 = std::max(x1, n.bounds.right());
    y1 = std::max(y1, n.bounds.bottom());
  }
  return Rect{x0, y0, x1 - x0, y1 - y0};
}

std::string AllocateId(const std::string& base, IdPool& ids) {
  std::string id = base;
  for (int k = 1; ids.count(id) != 0; ++k) id = base + "~" + std::to_string(k);
  ids.insert(id);
  return id;
}

std::vector<Rect> BoundsOf(const std::vector<DesignNode>& nodes) {
  std::vector<Rect> out;
  out.reserve(nodes.size());
  for (const DesignNode& n : nodes) out.push_back(n.bounds);
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> ProjectionClusters(
    std::span<const Rect> rects, Axis axis) {
  std::vector<std::size_t> order(rects.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    Interval ia = Project(rects[a], axis), ib = Project(rects[b], axis);
    if (ia.start != ib.start) return ia.start < ib.start;
    return ia.end < ib.end;
  });
  std::vector<std::vector<std::size_t>> clusters;
  double reach = 0;
  for (std::size_t idx : order) {
    Interval iv = Project(rects[idx], axis);
    if (!clusters.empty() && iv.start < reach) {
      clusters.back().push_back(idx);
      reach = std::max(reach, iv.end);
    } else {
      clusters.push_back({idx});
      reach = iv.end;
    }
  }
  for (auto& c : clusters) std::sort(c.begin(), c.end());
  return clusters;
}

IdPool CollectIds(const DesignDocument& doc) {
  IdPool ids;
  for (const Screen& s : doc.screens) {
    ForEachPreorder(s.root, [&](const DesignNode& n) {
      ids.insert(n.id);
      if (n.instance) {
        for (const NodeOverlay& o : n.instance->nodes) ids.insert(o.id);
      }
    });
  }
  return ids;
}

namespace {

struct Arranged {
  std::optional<Direction> direction;
  std::vector<DesignNode> children;
};

DesignNode GroupFlowChildren(DesignNode container, IdPool& ids);

Arranged Arrange(const std::string& parent_id, std::vector<DesignNode> nodes,
                 IdPool& ids) {
  std::vector<Rect> rects = BoundsOf(nodes);
  Direction direction = Direction::kColumn;
  auto clusters = ProjectionClusters(rects, Axis::kY);
  if (clusters.size() < 2) {
    clusters = ProjectionClusters(rects, Axis::kX);
    direction = Direction::kRow;
  }
  if (clusters.size() < 2) {
    for (DesignNode& n : nodes) n.positioning = Positioning::kAbsolute;
    return Arranged{std::nullopt, std::move(nodes)};
  }
  Arranged out{direction, {}};
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    const auto& members = clusters[k];
    if (members.size() == 1) {
      out.children.push_back(std::move(nodes[members[0]]));
      continue;
    }
    DesignNode wrapper;
    wrapper.id = AllocateId("g:" + parent_id + ":" + std::to_string(k), ids);
    wrapper.kind = NodeKind::kGroup;
    wrapper.origin = NodeOrigin::kSynthesized;
    for (std::size_t m : members) {
      wrapper.children.push_back(std::move(nodes[m]));
    }
    wrapper.bounds = UnionBounds(wrapper.children);
    wrapper = GroupFlowChildren(std::move(wrapper), ids);
    if (!wrapper.layout) {
      wrapper.name = "Group";
    } else {
      wrapper.name =
          wrapper.layout->direction == Direction::kRow ? "Row" : "Column";
    }
    out.children.push_back(std::move(wrapper));
  }
  return out;
}

DesignNode GroupFlowChildren(DesignNode container, IdPool& ids) {
  std::vector<DesignNode> flow;
  std::vector<DesignNode> absolute;
  for (DesignNode& c : container.children) {
    (c.positioning == Positioning::kFlow ? flow : absolute)
        .push_back(std::move(c));
  }
  container.children.clear();
  container.layout.reset();
  if (flow.size() == 1) {
    container.layout = AutoLayoutSpec{};
    container.layout->direction = Direction::kColumn;
    container.children.push_back(std::move(flow[0]));
  } else if (flow.size() > 1) {
    Arranged arranged = Arrange(container.id, std::move(flow), ids);
    if (arranged.direction) {
      container.layout = AutoLayoutSpec{};
      container.layout->direction = *arranged.direction;
    }
    container.children = std::move(arranged.children);
  }
  for (DesignNode& a : absolute) container.children.push_back(std::move(a));
  return container;
}

}  // namespace

DesignNode GroupLayers(DesignNode container, IdPool& ids) {
  return GroupFlowChildren(std::move(container), ids);
}

AutoLayoutSpec InferAutoLayout(const DesignNode& group, Direction direction) {
  AutoLayoutSpec spec;
  spec.direction = direction;
  spec.sizing = group.origin == NodeOrigin::kSynthesized ? Sizing::kHug
                                                          : Sizing::kFixed;
  std::vector<const DesignNode*> flow;
  for (const DesignNode& c : group.children) {
    if (c.positioning == Positioning::kFlow) flow.push_back(&c);
  }
  if (flow.empty()) return spec;

  const Axis main = direction == Direction::kRow ? Axis::kX : Axis::kY;
  const Axis cross = direction == Direction::kRow ? Axis::kY : Axis::kX;
  Interval box_main = Project(group.bounds, main);
  Interval box_cross = Project(group.bounds, cross);

  std::vector<double> gaps;
  for (std::size_t i = 1; i < flow.size(); ++i) {
    Interval prev = Project(flow[i - 1]->bounds, main);
    Interval cur = Project(flow[i]->bounds, main);
    if (cur.start < prev.end) {
      throw Error(ErrorCode::kNonUniformAxis, flow[i]->id,
                  "children overlap along the layout direction");
    }
    gaps.push_back(cur.start - prev.end);
  }

  if (!gaps.empty()) {
    std::vector<double> sorted = gaps;
    std::sort(sorted.begin(), sorted.end());
    std::size_t mid = sorted.size() / 2;
    double median = sorted.size() % 2 == 1
                        ? sorted[mid]
                        : (sorted[mid - 1] + sorted[mid]) / 2.0;
    double deviation = 0;
    for (double g : gaps) deviation = std::max(deviation, std::fabs(g - median));
    if (deviation <= kGapTolerancePx) {
      spec.gap = median;
    } else {
      spec.gap = 0;
      spec.leading_margins.push_back(0);
      for (double g : gaps) spec.leading_margins.push_back(g);
    }
  }

  double lead = Project(flow.front()->bounds, main).start - box_main.start;
  double trail = box_main.end - Project(flow.back()->bounds, main).end;
  double cross_lo = Project(flow.front()->bounds, cross).start;
  double cross_hi = Project(flow.front()->bounds, cross).end;
  for (const DesignNode* c : flow) {
    Interval iv = Project(c->bounds, cross);
    cross_lo = std::min(cross_lo, iv.start);
    cross_hi = std::max(cross_hi, iv.end);
  }
  double cross_lead = std::max(0.0, cross_lo - box_cross.start);
  double cross_trail = std::max(0.0, box_cross.end - cross_hi);
  lead = std::max(0.0, lead);
  trail = std::max(0.0, trail);

  if (direction == Direction::kRow) {
    spec.padding = Padding{cross_lead, trail, cross_trail, lead};
  } else {
    spec.padding = Padding{lead, cross_trail, trail, cross_lead};
  }

  std::vector<double> offsets;
  bool any_offset = false;
  for (const DesignNode* c : flow) {
    double off = Project(c->bounds, cross).start -
                 (box_cross.start + cross_lead);
    any_offset = any_offset || off != 0;
    offsets.push_back(off);
  }
  if (any_offset) spec.cross_offsets = std::move(offsets);
  return spec;
}

namespace {

// A flow sibling lying entirely inside an earlier (lower z) frame or group
// becomes an absolute child of the smallest such container.
void ApplyContainment(DesignNode& node) {
  const std::size_t n = node.children.size();
  std::vector<std::optional<std::size_t>> target(n);
  for (std::size_t j = 0; j < n; ++j) {
    const DesignNode& cj = node.children[j];
    if (cj.positioning != Positioning::kFlow) continue;
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < j; ++i) {
      const DesignNode& ci = node.children[i];
      if (!IsContainerKind(ci.kind) || ci.instance) continue;
      if (!Contains(ci.bounds, cj.bounds)) continue;
      if (!best || Area(ci.bounds) <= Area(node.children[*best].bounds)) {
        best = i;
      }
    }
    target[j] = best;
  }
  if (std::none_of(target.begin(), target.end(),
                   [](const auto& t) { return t.has_value(); })) {
    return;
  }
  std::vector<std::vector<std::size_t>> adoptees(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (target[j]) adoptees[*target[j]].push_back(j);
  }
  std::vector<DesignNode> old = std::move(node.children);
  std::function<DesignNode(std::size_t)> build = [&](std::size_t i) {
    DesignNode out = std::move(old[i]);
    for (std::size_t j : adoptees[i]) {
      DesignNode child = build(j);
      child.positioning = Positioning::kAbsolute;
      out.children.push_back(std::move(child));
    }
    return out;
  };
  node.children.clear();
  for (std::size_t i = 0; i < n; ++i) {
    if (!target[i]) node.children.push_back(build(i));
  }
}

void FinalizeLayouts(DesignNode& node) {
  if (node.layout) {
    node.layout = InferAutoLayout(node, node.layout->direction);
  }
  for (DesignNode& c : node.children) {
    if (c.origin == NodeOrigin::kSynthesized) FinalizeLayouts(c);
  }
}

void OptimizeNode(DesignNode& node, IdPool& ids) {
  if (!IsContainerKind(node.kind) || node.instance) {
    node.layout.reset();
    return;
  }
  ApplyContainment(node);
  for (DesignNode& c : node.children) OptimizeNode(c, ids);
  node = GroupLayers(std::move(node), ids);
  FinalizeLayouts(node);
}

}  // namespace

DesignDocument OptimizeDocument(const DesignDocument& doc) {
  DesignDocument out = doc;
  IdPool ids = CollectIds(doc);
  for (Screen& s : out.screens) OptimizeNode(s.root, ids);
  return out;
}

namespace {

void DetectIn(const DesignNode& node, std::vector<Finding>& out) {
  if (!IsContainerKind(node.kind)) return;
  std::vector<const DesignNode*> flow;
  for (const DesignNode& c : node.children) {
    if (c.positioning == Positioning::kFlow) flow.push_back(&c);
  }
  bool overlaps = false;
  for (std::size_t j = 0; j < flow.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      double smaller = std::min(Area(flow[i]->bounds), Area(flow[j]->bounds));
      double inter = IntersectionArea(flow[i]->bounds, flow[j]->bounds);
      if (inter > kOverlapFraction * smaller && inter > 0) {
        overlaps = true;
        out.push_back(Finding{flow[j]->id, FindingKind::kOverlappingLayers,
                              "overlaps sibling '" + flow[i]->id + "'"});
        break;
      }
    }
  }
  if (flow.size() >= 2) {
    std::vector<Rect> rects;
    for (const DesignNode* c : flow) rects.push_back(c->bounds);
    auto clusters = ProjectionClusters(rects, Axis::kY);
    if (clusters.size() < 2) clusters = ProjectionClusters(rects, Axis::kX);
    bool any_group = std::any_of(clusters.begin(), clusters.end(),
                                 [](const auto& c) { return c.size() > 1; });
    bool all_leaves = std::all_of(flow.begin(), flow.end(),
                                  [](const DesignNode* c) { return IsLeaf(*c); });
    if (flow.size() > kUngroupedChildThreshold && clusters.size() >= 2 &&
        (any_group || all_leaves)) {
      out.push_back(Finding{
          node.id,
          any_group ? FindingKind::kUngroupedSiblings
                    : FindingKind::kFlatDeepList,
          std::to_string(flow.size()) + " direct children in " +
              std::to_string(clusters.size()) + " projection clusters"});
    } else if (clusters.size() < 2 && !overlaps) {
      out.push_back(Finding{node.id, FindingKind::kAbsoluteOnly,
                            "no projection cut separates " +
                                std::to_string(flow.size()) + " children"});
    }
  }
  for (const DesignNode& c : node.children) DetectIn(c, out);
}

}  // namespace

std::vector<Finding> DetectSuboptimal(const DesignDocument& doc) {
  std::vector<Finding> raw;
  for (const Screen& s : doc.screens) DetectIn(s.root, raw);
  std::unordered_map<std::string, std::size_t> position;
  std::size_t k = 0;
  for (const Screen& s : doc.screens) {
    ForEachPreorder(s.root, [&](const DesignNode& n) { position[n.id] = k++; });
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [&](const Finding& a, const Finding& b) {
                     return position[a.node_id] < position[b.node_id];
                   });
  return raw;
}

}  // namespace ldmf
