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

#include "ldmf/tagger.h"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <set>

#include "ldmf/componentizer.h"
#include "ldmf/optimizer.h"
#include "ldmf/text_util.h"

namespace ldmf {

namespace {

bool IsCircle(double w, double h, double corner_radius) {
  double shorter = std::min(w, h);
  return shorter > 0 && std::fabs(w - h) <= 0.15 * std::max(w, h) &&
         corner_radius >= 0.45 * shorter;
}

}  // namespace

FeatureVector ExtractFeatures(const DesignNode& node, const NodeIndex& ctx,
                              const FeatureOptions& options) {
  FeatureVector fv;
  fv.kind = node.kind;
  fv.width_px = node.bounds.w;
  fv.height_px = node.bounds.h;
  fv.aspect_ratio = node.bounds.h > 0 ? node.bounds.w / node.bounds.h : 0;
  fv.corner_radius_px = node.corner_radius.value_or(0);
  fv.has_fill = node.fill.has_value();
  fv.has_stroke = node.stroke.has_value();
  fv.child_count = static_cast<int>(node.children.size());
  for (const DesignNode& c : node.children) {
    if (c.kind == NodeKind::kText) ++fv.text_child_count;
    if (c.kind == NodeKind::kVector) ++fv.vector_child_count;
    if (IsLeaf(c) && IsCircle(c.bounds.w, c.bounds.h,
                              c.corner_radius.value_or(0))) {
      fv.has_circle_child = true;
    }
  }
  fv.single_text_child =
      node.children.size() == 1 && node.children[0].kind == NodeKind::kText;
  if (node.text) {
    fv.text_length = static_cast<int>(Utf8Length(node.text->content));
  } else if (fv.single_text_child && node.children[0].text) {
    fv.text_length =
        static_cast<int>(Utf8Length(node.children[0].text->content));
  }
  if (options.use_names) fv.name_tokens = NameTokens(node.name);
  if (const DesignNode* parent = ctx.parent(node.id)) {
    for (const DesignNode& s : parent->children) {
      if (&s == &node || s.id == node.id) continue;
      if (s.kind == node.kind && std::fabs(s.bounds.w - node.bounds.w) <= 0.5 &&
          std::fabs(s.bounds.h - node.bounds.h) <= 0.5) {
        ++fv.sibling_repeat_count;
      }
    }
  }
  return fv;
}

namespace {

bool HasToken(const FeatureVector& fv,
              std::initializer_list<std::string_view> words) {
  for (const std::string& t : fv.name_tokens) {
    for (std::string_view w : words) {
      if (t == w) return true;
    }
  }
  return false;
}

void Raise(TagScores& s, TagLabel tag, double score) {
  double& slot = s[static_cast<std::size_t>(tag)];
  slot = std::max(slot, std::min(1.0, score));
}

}  // namespace

TagScores RuleTableBackend::Classify(const FeatureVector& fv) const {
  TagScores s{};
  const bool boxy = fv.kind == NodeKind::kFrame ||
                    fv.kind == NodeKind::kGroup || fv.kind == NodeKind::kRect;
  const bool container = fv.kind == NodeKind::kFrame ||
                         fv.kind == NodeKind::kGroup;
  const double w = fv.width_px;
  const double h = fv.height_px;
  const double shorter = std::min(w, h);
  const bool circle = IsCircle(w, h, fv.corner_radius_px);
  const bool square = h > 0 && std::fabs(fv.aspect_ratio - 1.0) <= 0.15;
  const bool pill = h > 0 && fv.corner_radius_px >= 0.45 * h &&
                    fv.aspect_ratio >= 1.5;
  const bool field_height = h >= 24 && h <= 64;

  // Neutral fallbacks by kind.
  switch (fv.kind) {
    case NodeKind::kText:
      Raise(s, TagLabel::kText, 1.0);
      break;
    case NodeKind::kImage:
      Raise(s, TagLabel::kImage, 1.0);
      break;
    case NodeKind::kVector:
      Raise(s, TagLabel::kImage, 0.5);
      break;
    default:
      Raise(s, TagLabel::kContainer, 0.3);
      break;
  }
  if (!boxy) return s;

  // Each geometric rule scores 0.8 when all of its conditions hold, +0.2
  // with a matching name token; a name token alone scores 0.55.
  auto rule = [&](TagLabel tag, bool geometry,
                  std::initializer_list<std::string_view> words) {
    bool named = HasToken(fv, words);
    if (geometry) {
      Raise(s, tag, 0.8 + (named ? 0.2 : 0.0));
    } else if (named) {
      Raise(s, tag, 0.55);
    }
  };

  rule(TagLabel::kButton,
       fv.has_fill && !fv.has_stroke && fv.single_text_child &&
           fv.corner_radius_px >= 4 && fv.aspect_ratio >= 1.5 &&
           fv.aspect_ratio <= 8,
       {"button", "btn", "cta", "submit"});
  rule(TagLabel::kInput,
       fv.has_stroke && field_height && fv.aspect_ratio >= 3 &&
           fv.vector_child_count == 0 &&
           (fv.child_count == 0 || fv.single_text_child),
       {"input", "field", "textfield", "email", "password", "search"});
  rule(TagLabel::kTextarea,
       fv.has_stroke && h > 64 && w >= 120 && fv.vector_child_count == 0 &&
           (fv.child_count == 0 || fv.single_text_child),
       {"textarea", "message", "comment", "comments", "notes", "bio"});
  rule(TagLabel::kCheckbox,
       fv.has_stroke && square && shorter <= 32 && !circle &&
           fv.child_count <= 1,
       {"checkbox", "check", "agree", "terms"});
  rule(TagLabel::kRadio,
       fv.has_stroke && circle && shorter <= 32 && fv.child_count <= 1,
       {"radio", "option"});
  rule(TagLabel::kSwitch,
       pill && fv.aspect_ratio <= 2.6 && h <= 40 && fv.has_circle_child &&
           fv.child_count == 1,
       {"switch", "toggle"});

  // A bordered field holding a label and a chevron/icon: select, dropdown
  // and date/time picker share the geometry and are told apart by name.
  const bool chooser = fv.has_stroke && field_height &&
                       fv.aspect_ratio >= 2 && fv.child_count == 2 &&
                       fv.text_child_count == 1 && fv.vector_child_count == 1;
  auto chooser_rule = [&](TagLabel tag, double base,
                          std::initializer_list<std::string_view> words) {
    bool named = HasToken(fv, words);
    if (chooser) {
      Raise(s, tag, base + (named ? 0.3 : 0.0));
    } else if (named) {
      Raise(s, tag, 0.55);
    }
  };
  chooser_rule(TagLabel::kSelect, 0.6, {"select", "country", "choose"});
  chooser_rule(TagLabel::kDropdown, 0.6, {"dropdown", "menu", "sort"});
  chooser_rule(TagLabel::kDateTimePicker, 0.55,
               {"date", "time", "datetime", "calendar", "birthday"});

  if (container) {
    auto named_big = [&](TagLabel tag, double score,
                         std::initializer_list<std::string_view> words) {
      if (HasToken(fv, words)) Raise(s, tag, score);
    };
    named_big(TagLabel::kAudioPlayer, 0.7, {"audio", "podcast", "music"});
    named_big(TagLabel::kVideo,
              fv.aspect_ratio >= 1.2 && fv.aspect_ratio <= 2.4 ? 0.8 : 0.6,
              {"video", "movie", "trailer"});
    named_big(TagLabel::kGoogleMaps, 0.7, {"map", "maps", "location"});
    named_big(TagLabel::kFileUpload, 0.7,
              {"upload", "dropzone", "attach", "attachment"});
    named_big(TagLabel::kPopups, 0.7, {"modal", "popup", "dialog"});
    named_big(TagLabel::kProgress, 0.7, {"progress", "loading"});
    named_big(TagLabel::kDrawer, 0.6, {"drawer", "sidebar", "sidenav"});
    named_big(TagLabel::kGrid, 0.6, {"grid", "gallery"});
    named_big(TagLabel::kSlider, 0.6, {"slider", "range"});
    named_big(TagLabel::kQuantitySelector, 0.6,
              {"quantity", "qty", "stepper"});
    if (fv.aspect_ratio >= 8 && h <= 16 && fv.child_count >= 1 &&
        fv.corner_radius_px >= 0.45 * h) {
      Raise(s, TagLabel::kProgress, 0.5);
    }
  }
  return s;
}

TagAssignment ClassifyNode(const FeatureVector& fv,
                           const ClassifierBackend& backend) {
  TagScores scores = backend.Classify(fv);
  std::size_t best = 0;
  for (std::size_t i = 1; i < kTagCount; ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  if (!(scores[best] > 0)) {
    TagLabel fallback = fv.kind == NodeKind::kText    ? TagLabel::kText
                        : fv.kind == NodeKind::kImage ? TagLabel::kImage
                                                      : TagLabel::kContainer;
    return TagAssignment{fallback, 0.0};
  }
  return TagAssignment{AllTags()[best],
                       std::clamp(scores[best], 0.0, 1.0)};
}

namespace {

// Flow children with synthesized wrappers replaced by their contents.
void FlattenItems(const DesignNode& n, std::vector<const DesignNode*>& out) {
  for (const DesignNode& c : n.children) {
    if (c.positioning != Positioning::kFlow) continue;
    if (c.origin == NodeOrigin::kSynthesized) {
      FlattenItems(c, out);
    } else {
      out.push_back(&c);
    }
  }
}

void CollectLeaves(const DesignNode& n, std::vector<const DesignNode*>& out) {
  for (const DesignNode& c : n.children) {
    if (c.children.empty()) {
      out.push_back(&c);
    } else {
      CollectLeaves(c, out);
    }
  }
}

double Snap(double v) { return std::round(v * 2.0) / 2.0; }

bool IsGrid(const std::vector<const DesignNode*>& cells, const TagMap& tags) {
  if (cells.size() < 4) return false;
  std::set<double> xs, ys;
  std::set<std::pair<double, double>> slots;
  for (const DesignNode* c : cells) {
    xs.insert(Snap(c->bounds.x));
    ys.insert(Snap(c->bounds.y));
    slots.emplace(Snap(c->bounds.x), Snap(c->bounds.y));
  }
  if (xs.size() < 2 || ys.size() < 2) return false;
  if (xs.size() * ys.size() != cells.size() || slots.size() != cells.size()) {
    return false;
  }
  Fingerprint first = FingerprintSubtree(*cells.front(), tags);
  return std::all_of(cells.begin() + 1, cells.end(), [&](const DesignNode* c) {
    return FingerprintSubtree(*c, tags) == first;
  });
}

bool IsDrawer(const DesignNode& n, const std::vector<const DesignNode*>& items,
              ScreenSize screen) {
  if (items.size() < 2 || screen.height <= 0) return false;
  const Rect& b = n.bounds;
  bool full_height = b.y <= 1 && b.h >= 0.95 * screen.height;
  bool thin = b.w <= std::min(360.0, 0.35 * screen.width);
  bool flush = std::fabs(b.x) <= 1 || std::fabs(b.right() - screen.width) <= 1;
  if (!full_height || !thin || !flush) return false;
  std::vector<Rect> rects;
  for (const DesignNode* c : items) rects.push_back(c->bounds);
  return ProjectionClusters(rects, Axis::kY).size() == items.size();
}

bool IsSlider(const DesignNode& n) {
  // The innermost original container holding the pair gets the label.
  if (n.children.size() == 1 && !n.children[0].children.empty() &&
      n.children[0].origin == NodeOrigin::kOriginal) {
    return false;
  }
  std::vector<const DesignNode*> leaves;
  CollectLeaves(n, leaves);
  if (leaves.size() < 2 || leaves.size() > 3) return false;
  const DesignNode* track = nullptr;
  const DesignNode* thumb = nullptr;
  for (const DesignNode* l : leaves) {
    if (l->kind == NodeKind::kText) return false;
    const Rect& r = l->bounds;
    bool bar = r.h > 0 && r.h <= 12 && r.w / r.h >= 6;
    if (IsCircle(r.w, r.h, l->corner_radius.value_or(0)) &&
        std::min(r.w, r.h) <= 32) {
      thumb = l;
    } else if (bar && (track == nullptr || r.w > track->bounds.w)) {
      track = l;
    } else if (!bar) {
      return false;
    }
  }
  if (track == nullptr || thumb == nullptr) return false;
  double cx = thumb->bounds.x + thumb->bounds.w / 2;
  double cy = thumb->bounds.y + thumb->bounds.h / 2;
  double ty = track->bounds.y + track->bounds.h / 2;
  return cx >= track->bounds.x && cx <= track->bounds.right() &&
         std::fabs(cy - ty) <= thumb->bounds.h / 2;
}

std::optional<std::string> LabelText(const DesignNode& n) {
  if (n.text) return n.text->content;
  std::vector<const DesignNode*> texts;
  ForEachPreorder(n, [&](const DesignNode& d) {
    if (d.text) texts.push_back(&d);
  });
  if (texts.size() == 1) return texts.front()->text->content;
  return std::nullopt;
}

bool IsQuantitySelector(const std::vector<const DesignNode*>& items) {
  if (items.size() != 3) return false;
  std::vector<const DesignNode*> sorted = items;
  std::sort(sorted.begin(), sorted.end(),
            [](const DesignNode* a, const DesignNode* b) {
              return a->bounds.x < b->bounds.x;
            });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i]->bounds.x < sorted[i - 1]->bounds.right()) return false;
  }
  auto minus = LabelText(*sorted[0]);
  auto number = LabelText(*sorted[1]);
  auto plus = LabelText(*sorted[2]);
  if (!minus || !number || !plus) return false;
  bool is_minus = *minus == "-" || *minus == "−" || *minus == "–";
  bool is_number = !number->empty() &&
                   std::all_of(number->begin(), number->end(), [](char c) {
                     return c >= '0' && c <= '9';
                   });
  return is_minus && is_number && *plus == "+";
}

void DetectIn(const DesignNode& n, const TagMap& tags, ScreenSize screen,
              std::vector<std::pair<std::string, TagLabel>>& out) {
  if (IsContainerKind(n.kind) && !n.instance && !n.children.empty()) {
    std::size_t flow_children = 0;
    for (const DesignNode& c : n.children) {
      if (c.positioning == Positioning::kFlow) ++flow_children;
    }
    std::vector<const DesignNode*> items;
    FlattenItems(n, items);
    if (flow_children >= 2 || n.origin == NodeOrigin::kOriginal) {
      if (flow_children >= 2 && IsGrid(items, tags)) {
        out.emplace_back(n.id, TagLabel::kGrid);
      } else if (IsDrawer(n, items, screen)) {
        out.emplace_back(n.id, TagLabel::kDrawer);
      } else if (IsQuantitySelector(items)) {
        out.emplace_back(n.id, TagLabel::kQuantitySelector);
      } else if (IsSlider(n)) {
        out.emplace_back(n.id, TagLabel::kSlider);
      }
    }
  }
  for (const DesignNode& c : n.children) DetectIn(c, tags, screen, out);
}

}  // namespace

std::vector<std::pair<std::string, TagLabel>> DetectComposites(
    const DesignNode& subtree, const TagMap& tags, ScreenSize screen) {
  std::vector<std::pair<std::string, TagLabel>> out;
  DetectIn(subtree, tags, screen, out);
  return out;
}

TagMap TagDocument(const DesignDocument& doc, const ClassifierBackend& backend,
                   const TaggingOptions& options) {
  NodeIndex index = IndexNodes(doc);
  TagMap tags;
  for (const std::string& id : index.preorder) {
    const DesignNode& node = index.at(id);
    tags[id] = ClassifyNode(ExtractFeatures(node, index, options.features),
                            backend);
  }
  for (const Screen& s : doc.screens) {
    for (const auto& [id, label] :
         DetectComposites(s.root, tags, ScreenSize{s.width, s.height})) {
      TagAssignment& t = tags[id];
      if (t.label == TagLabel::kContainer) t = TagAssignment{label, 0.9};
    }
  }
  return tags;
}

}  // namespace ldmf
