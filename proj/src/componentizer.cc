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

#include "ldmf/componentizer.h"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "ldmf/json_io.h"
#include "ldmf/text_util.h"

namespace ldmf {

std::string_view PropKindName(PropKind kind) {
  switch (kind) {
    case PropKind::kText:
      return "text";
    case PropKind::kImageRef:
      return "imageRef";
    case PropKind::kFillColor:
      return "fillColor";
  }
  return "text";
}

std::string PathString(const NodePath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

std::string TemplateNodeId(std::string_view component_id,
                           const NodePath& path) {
  return std::string(component_id) + "#" + PathString(path);
}

const DesignNode* NodeAtPath(const DesignNode& root, const NodePath& path) {
  const DesignNode* cur = &root;
  for (std::size_t idx : path) {
    if (idx >= cur->children.size()) return nullptr;
    cur = &cur->children[idx];
  }
  return cur;
}

namespace {

void AppendHeader(const DesignNode& n, const TagMap& tags, std::string& out) {
  out += '(';
  out += NodeKindName(n.kind);
  out += '|';
  auto it = tags.find(n.id);
  out += it == tags.end() ? std::string_view("?") : TagName(it->second.label);
  out += '|';
  out += std::to_string(n.children.size());
  out += n.positioning == Positioning::kAbsolute ? "|abs" : "|flow";
  out += n.origin == NodeOrigin::kSynthesized ? "|syn" : "|orig";
  out += "|f";
  out += n.fill ? FormatNumber(n.fill->opacity) : "-";
  out += "|r";
  out += n.corner_radius ? FormatNumber(*n.corner_radius) : "-";
  out += "|s";
  out += n.stroke ? n.stroke->color + "," + FormatNumber(n.stroke->width)
                  : "-";
  out += "|t";
  if (n.text) {
    out += FormatNumber(n.text->font_size) + "," +
           std::to_string(n.text->font_weight) + "," +
           std::string(TextAlignName(n.text->align));
  } else {
    out += '-';
  }
  out += n.image_ref ? "|i1" : "|i-";
  out += "|c";
  out += n.instance ? n.instance->component_id : "-";
}

void AppendCanonical(const DesignNode& n, const TagMap& tags,
                     std::string& out) {
  AppendHeader(n, tags, out);
  for (const DesignNode& c : n.children) AppendCanonical(c, tags, out);
  out += ')';
}

}  // namespace

std::string CanonicalForm(const DesignNode& node, const TagMap& tags) {
  std::string out;
  AppendCanonical(node, tags, out);
  return out;
}

Fingerprint FingerprintSubtree(const DesignNode& node, const TagMap& tags) {
  return Fnv1a128(CanonicalForm(node, tags));
}

namespace {

struct Entry {
  const DesignNode* node;
  std::size_t preorder;
  std::size_t size;
  std::string canonical;
  Fingerprint digest;
};

// Computes canonical forms bottom-up so each subtree is serialized once.
std::string CollectEntries(const DesignNode& n, bool is_root,
                           const TagMap& tags, std::size_t& counter,
                           std::vector<Entry>& out, std::size_t& size) {
  std::size_t my_preorder = counter++;
  std::size_t slot = out.size();
  bool eligible = !is_root && IsContainerKind(n.kind) && !n.instance &&
                  n.origin == NodeOrigin::kOriginal;
  if (eligible) out.push_back(Entry{&n, my_preorder, 0, {}, {}});
  std::string form;
  AppendHeader(n, tags, form);
  size = 1;
  for (const DesignNode& c : n.children) {
    std::size_t child_size = 0;
    form += CollectEntries(c, false, tags, counter, out, child_size);
    size += child_size;
  }
  form += ')';
  if (eligible) {
    out[slot].size = size;
    out[slot].canonical = form;
    out[slot].digest = Fnv1a128(form);
  }
  return form;
}

void CollectSubtreeIds(const DesignNode& n,
                       std::unordered_set<std::string>& ids) {
  ForEachPreorder(n, [&](const DesignNode& d) { ids.insert(d.id); });
}

}  // namespace

std::vector<RepeatCandidate> DetectRepeats(const DesignDocument& doc,
                                           const TagMap& tags,
                                           const RepeatOptions& options) {
  std::vector<Entry> entries;
  std::size_t counter = 0;
  for (const Screen& s : doc.screens) {
    std::size_t size = 0;
    CollectEntries(s.root, true, tags, counter, entries, size);
  }

  std::map<Fingerprint, std::vector<const Entry*>> groups;
  for (const Entry& e : entries) {
    if (e.size < options.min_nodes) continue;
    auto& bucket = groups[e.digest];
    if (!bucket.empty() && bucket.front()->canonical != e.canonical) {
      throw Error(ErrorCode::kAlignment, e.node->id,
                  "fingerprint collision between distinct subtrees");
    }
    bucket.push_back(&e);
  }

  std::vector<RepeatCandidate> raw;
  std::vector<std::size_t> first_seen;
  for (auto& [digest, bucket] : groups) {
    if (bucket.size() < options.min_instances) continue;
    RepeatCandidate c{digest, bucket.front()->size, {}};
    std::sort(bucket.begin(), bucket.end(),
              [](const Entry* a, const Entry* b) {
                return a->preorder < b->preorder;
              });
    for (const Entry* e : bucket) c.instance_ids.push_back(e->node->id);
    first_seen.push_back(bucket.front()->preorder);
    raw.push_back(std::move(c));
  }
  std::vector<std::size_t> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].subtree_size != raw[b].subtree_size) {
      return raw[a].subtree_size > raw[b].subtree_size;
    }
    return first_seen[a] < first_seen[b];
  });

  NodeIndex index = IndexNodes(doc);
  std::unordered_set<std::string> covered;
  std::vector<RepeatCandidate> selected;
  for (std::size_t i : order) {
    RepeatCandidate c = raw[i];
    std::erase_if(c.instance_ids,
                  [&](const std::string& id) { return covered.count(id) != 0; });
    if (c.instance_ids.size() < options.min_instances) continue;
    for (const std::string& id : c.instance_ids) {
      CollectSubtreeIds(index.at(id), covered);
    }
    selected.push_back(std::move(c));
  }
  return selected;
}

namespace {

void AlignInto(const std::vector<const DesignNode*>& nodes, NodePath& path,
               std::vector<std::pair<NodePath, PropKind>>& varying) {
  const DesignNode& first = *nodes.front();
  for (const DesignNode* n : nodes) {
    if (n->kind != first.kind || n->children.size() != first.children.size() ||
        n->fill.has_value() != first.fill.has_value() ||
        n->text.has_value() != first.text.has_value() ||
        n->image_ref.has_value() != first.image_ref.has_value()) {
      throw Error(ErrorCode::kAlignment, n->id,
                  "instance does not align with '" + first.id + "' at path '" +
                      PathString(path) + "'");
    }
  }
  auto differs = [&](auto&& get) {
    for (const DesignNode* n : nodes) {
      if (get(*n) != get(first)) return true;
    }
    return false;
  };
  if (first.text && differs([](const DesignNode& n) { return n.text->content; })) {
    varying.emplace_back(path, PropKind::kText);
  }
  if (first.image_ref &&
      differs([](const DesignNode& n) { return *n.image_ref; })) {
    varying.emplace_back(path, PropKind::kImageRef);
  }
  if (first.fill && differs([](const DesignNode& n) { return n.fill->color; })) {
    varying.emplace_back(path, PropKind::kFillColor);
  }
  for (std::size_t i = 0; i < first.children.size(); ++i) {
    std::vector<const DesignNode*> column;
    column.reserve(nodes.size());
    for (const DesignNode* n : nodes) column.push_back(&n->children[i]);
    path.push_back(i);
    AlignInto(column, path, varying);
    path.pop_back();
  }
}

void ToTemplate(DesignNode& n, std::string_view component_id, NodePath& path,
                double dx, double dy, const TagMap& tags, TagMap& out_tags) {
  std::string tid = TemplateNodeId(component_id, path);
  auto it = tags.find(n.id);
  if (it != tags.end()) out_tags[tid] = it->second;
  n.id = tid;
  n.bounds.x -= dx;
  n.bounds.y -= dy;
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(i);
    ToTemplate(n.children[i], component_id, path, dx, dy, tags, out_tags);
    path.pop_back();
  }
}

std::string PropValue(const DesignNode& n, PropKind kind) {
  switch (kind) {
    case PropKind::kText:
      return n.text->content;
    case PropKind::kImageRef:
      return *n.image_ref;
    case PropKind::kFillColor:
      return n.fill->color;
  }
  return {};
}

void SetPropValue(DesignNode& n, PropKind kind, const std::string& value) {
  switch (kind) {
    case PropKind::kText:
      if (n.text) n.text->content = value;
      break;
    case PropKind::kImageRef:
      n.image_ref = value;
      break;
    case PropKind::kFillColor:
      if (n.fill) n.fill->color = value;
      break;
  }
}

DesignNode* MutableNodeAtPath(DesignNode& root, const NodePath& path) {
  DesignNode* cur = &root;
  for (std::size_t idx : path) {
    if (idx >= cur->children.size()) return nullptr;
    cur = &cur->children[idx];
  }
  return cur;
}

}  // namespace

ComponentDef InferProps(const std::vector<const DesignNode*>& instances,
                        const TagMap& tags, std::string component_id) {
  if (instances.empty()) {
    throw Error(ErrorCode::kAlignment, component_id, "no instances");
  }
  std::vector<std::pair<NodePath, PropKind>> varying;
  NodePath path;
  AlignInto(instances, path, varying);

  ComponentDef def;
  def.component_id = std::move(component_id);
  def.template_root = *instances.front();
  std::set<std::string> used;
  for (const auto& [p, kind] : varying) {
    const DesignNode* node = NodeAtPath(def.template_root, p);
    std::string base = CamelIdentifier(node->name, "prop");
    std::string name = base;
    for (int k = 2; used.count(name) != 0; ++k) name = base + std::to_string(k);
    used.insert(name);
    def.props.push_back(PropDef{name, kind, p});
  }
  NodePath root_path;
  double dx = def.template_root.bounds.x;
  double dy = def.template_root.bounds.y;
  ToTemplate(def.template_root, def.component_id, root_path, dx, dy, tags,
             def.tags);
  return def;
}

namespace {

struct Replacement {
  std::size_t def_index;
};

void CollectOverlay(const DesignNode& n, std::vector<NodeOverlay>& out) {
  out.push_back(NodeOverlay{n.id, n.name, n.bounds, n.layout});
  for (const DesignNode& c : n.children) CollectOverlay(c, out);
}

DesignNode MakeInstanceNode(const DesignNode& original,
                            const ComponentDef& def) {
  DesignNode inst = original;
  inst.children.clear();
  InstanceRef ref;
  ref.component_id = def.component_id;
  for (const PropDef& p : def.props) {
    ref.bindings[p.name] = PropValue(*NodeAtPath(original, p.path), p.kind);
  }
  CollectOverlay(original, ref.nodes);
  inst.instance = std::move(ref);
  return inst;
}

void Substitute(DesignNode& n,
                const std::unordered_map<std::string, Replacement>& plan,
                const std::vector<ComponentDef>& defs) {
  for (DesignNode& c : n.children) {
    auto it = plan.find(c.id);
    if (it != plan.end()) {
      c = MakeInstanceNode(c, defs[it->second.def_index]);
    } else {
      Substitute(c, plan, defs);
    }
  }
}

}  // namespace

ComponentizeResult Componentize(const DesignDocument& doc, const TagMap& tags,
                                const RepeatOptions& options) {
  ComponentizeResult result;
  result.doc = doc;
  std::vector<RepeatCandidate> candidates = DetectRepeats(doc, tags, options);
  if (candidates.empty()) return result;

  NodeIndex index = IndexNodes(doc);
  std::set<std::string> used_ids;
  std::unordered_map<std::string, Replacement> plan;
  for (const RepeatCandidate& c : candidates) {
    std::vector<const DesignNode*> instances;
    for (const std::string& id : c.instance_ids) {
      instances.push_back(&index.at(id));
    }
    std::string base = PascalIdentifier(instances.front()->name, "Component");
    std::string cid = base;
    for (int k = 2; used_ids.count(cid) != 0; ++k) {
      cid = base + std::to_string(k);
    }
    used_ids.insert(cid);
    result.defs.push_back(InferProps(instances, tags, cid));
    for (const std::string& id : c.instance_ids) {
      plan[id] = Replacement{result.defs.size() - 1};
    }
  }
  for (Screen& s : result.doc.screens) Substitute(s.root, plan, result.defs);
  return result;
}

DesignNode ExpandInstance(const DesignNode& instance_node,
                          const ComponentDef& def) {
  const InstanceRef& ref = *instance_node.instance;
  DesignNode out = def.template_root;
  std::size_t k = 0;
  bool size_ok = true;
  ForEachPreorderMutable(out, [&](DesignNode& n) {
    if (k >= ref.nodes.size()) {
      size_ok = false;
      return;
    }
    const NodeOverlay& o = ref.nodes[k++];
    n.id = o.id;
    n.name = o.name;
    n.bounds = o.bounds;
    n.layout = o.layout;
  });
  if (!size_ok || k != ref.nodes.size()) {
    throw Error(ErrorCode::kAlignment, instance_node.id,
                "instance node list does not match component '" +
                    def.component_id + "'");
  }
  for (const PropDef& p : def.props) {
    auto it = ref.bindings.find(p.name);
    if (it == ref.bindings.end()) {
      throw Error(ErrorCode::kMissingBinding, p.name,
                  "instance '" + instance_node.id + "' has no binding for '" +
                      p.name + "'");
    }
    DesignNode* target = MutableNodeAtPath(out, p.path);
    if (target == nullptr) {
      throw Error(ErrorCode::kAlignment, p.name, "prop path outside template");
    }
    SetPropValue(*target, p.kind, it->second);
  }
  out.positioning = instance_node.positioning;
  return out;
}

namespace {

void ExpandIn(DesignNode& n, const std::map<std::string, const ComponentDef*>& by_id) {
  for (DesignNode& c : n.children) {
    if (c.instance) {
      auto it = by_id.find(c.instance->component_id);
      if (it == by_id.end()) {
        throw Error(ErrorCode::kUnknownComponent, c.instance->component_id,
                    "instance '" + c.id + "' refers to an unknown component");
      }
      c = ExpandInstance(c, *it->second);
    } else {
      ExpandIn(c, by_id);
    }
  }
}

}  // namespace

DesignDocument ExpandComponents(const DesignDocument& doc,
                                const std::vector<ComponentDef>& defs) {
  std::map<std::string, const ComponentDef*> by_id;
  for (const ComponentDef& d : defs) by_id[d.component_id] = &d;
  DesignDocument out = doc;
  for (Screen& s : out.screens) {
    if (s.root.instance) {
      throw Error(ErrorCode::kInvalidArgument, s.root.id,
                  "screen root cannot be an instance");
    }
    ExpandIn(s.root, by_id);
  }
  return out;
}

}  // namespace ldmf
