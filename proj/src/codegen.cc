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

#include "ldmf/codegen.h"

#include <cstdint>
#include <sstream>
#include <utility>

#include "ldmf/hash.h"
#include "ldmf/text_util.h"

namespace ldmf {

bool DefineComponent::operator==(const DefineComponent&) const = default;

std::string_view OpName(const Instruction& instr) {
  struct Visitor {
    std::string_view operator()(const DefineComponent&) const {
      return "DefineComponent";
    }
    std::string_view operator()(const BeginElement&) const {
      return "BeginElement";
    }
    std::string_view operator()(const SetLayout&) const { return "SetLayout"; }
    std::string_view operator()(const SetStyle&) const { return "SetStyle"; }
    std::string_view operator()(const EmitText&) const { return "EmitText"; }
    std::string_view operator()(const EmitImage&) const { return "EmitImage"; }
    std::string_view operator()(const Instantiate&) const {
      return "Instantiate";
    }
    std::string_view operator()(const EndElement&) const {
      return "EndElement";
    }
  };
  return std::visit(Visitor{}, instr.op);
}

std::string CssClassFor(std::string_view name, NodeKind kind,
                        std::string_view node_id) {
  return KebabIdentifier(name, NodeKindName(kind)) + "-" +
         HexSuffix(Fnv1a64(node_id), 6);
}

std::string ElementFor(TagLabel tag, const DesignNode& node) {
  switch (tag) {
    case TagLabel::kButton:
      return "button";
    case TagLabel::kInput:
    case TagLabel::kCheckbox:
    case TagLabel::kRadio:
    case TagLabel::kSwitch:
    case TagLabel::kDateTimePicker:
      return "input";
    case TagLabel::kTextarea:
      return "textarea";
    case TagLabel::kSelect:
    case TagLabel::kDropdown:
      return "select";
    case TagLabel::kText:
      if (node.text) return node.text->font_size >= 24 ? "h2" : "p";
      return "div";
    case TagLabel::kImage:
      return node.kind == NodeKind::kImage ? "img" : "div";
    default:
      return "div";
  }
}

namespace {

bool HasEffect(const SetLayout& l) {
  return l.position == Positioning::kAbsolute || l.margin_top != 0 ||
         l.margin_left != 0 || l.flex.has_value();
}

// Layout of `n` placed as the `flow_index`-th flow child of `parent`.
SetLayout LayoutFor(const DesignNode& n, const DesignNode* parent,
                    std::size_t flow_index) {
  SetLayout sl;
  if (parent != nullptr) {
    sl.position = n.positioning;
    if (n.positioning == Positioning::kAbsolute) {
      sl.x = n.bounds.x - parent->bounds.x;
      sl.y = n.bounds.y - parent->bounds.y;
    } else if (parent->layout) {
      const AutoLayoutSpec& pl = *parent->layout;
      double lead = flow_index < pl.leading_margins.size()
                        ? pl.leading_margins[flow_index]
                        : 0.0;
      double cross = flow_index < pl.cross_offsets.size()
                         ? pl.cross_offsets[flow_index]
                         : 0.0;
      if (pl.direction == Direction::kRow) {
        sl.margin_left = lead;
        sl.margin_top = cross;
      } else {
        sl.margin_top = lead;
        sl.margin_left = cross;
      }
    }
  }
  if (n.layout) {
    sl.flex = FlexLayout{n.layout->direction, n.layout->gap,
                         n.layout->padding, n.layout->sizing};
  }
  return sl;
}

using PropSlots = std::map<std::pair<std::string, PropKind>, std::string>;

struct Slot {
  const BeginElement* begin = nullptr;
  const SetLayout* layout = nullptr;
  const SetStyle* style = nullptr;
};

std::vector<Slot> ElementSlots(const std::vector<Instruction>& instrs) {
  std::vector<Slot> slots;
  std::vector<std::size_t> open;
  for (const Instruction& i : instrs) {
    if (const auto* b = std::get_if<BeginElement>(&i.op)) {
      open.push_back(slots.size());
      slots.push_back(Slot{b, nullptr, nullptr});
    } else if (const auto* l = std::get_if<SetLayout>(&i.op)) {
      if (!open.empty()) slots[open.back()].layout = l;
    } else if (const auto* s = std::get_if<SetStyle>(&i.op)) {
      if (!open.empty()) slots[open.back()].style = s;
    } else if (std::holds_alternative<EndElement>(i.op)) {
      if (!open.empty()) open.pop_back();
    }
  }
  return slots;
}

class Lowerer {
 public:
  Lowerer(const TagMap& tags, const std::vector<ComponentDef>& defs)
      : tags_(tags) {
    for (const ComponentDef& d : defs) defs_[d.component_id] = &d;
  }

  DefineComponent LowerDefinition(const ComponentDef& def) {
    DefineComponent out;
    out.component_id = def.component_id;
    out.props = def.props;
    PropSlots slots;
    for (const PropDef& p : def.props) {
      const DesignNode* target = NodeAtPath(def.template_root, p.path);
      slots[{target->id, p.kind}] = p.name;
    }
    LowerNode(def.template_root, nullptr, 0, def.tags, &slots, out.body);
    return out;
  }

  void LowerScreen(const Screen& s, const std::map<std::string,
                   DefineComponent>& lowered, std::vector<Instruction>& out) {
    lowered_ = &lowered;
    LowerNode(s.root, nullptr, 0, tags_, nullptr, out);
  }

 private:
  SetStyle StyleFor(const DesignNode& n, const PropSlots* slots) const {
    SetStyle st;
    st.width = n.bounds.w;
    st.height = n.bounds.h;
    if (n.fill) {
      FillStyle f{n.fill->color, std::nullopt, n.fill->opacity};
      if (slots != nullptr) {
        auto it = slots->find({n.id, PropKind::kFillColor});
        if (it != slots->end()) {
          f.prop = it->second;
          f.color.clear();
        }
      }
      st.fill = std::move(f);
    }
    st.corner_radius = n.corner_radius;
    st.stroke = n.stroke;
    if (n.text) {
      st.typography =
          Typography{n.text->font_size, n.text->font_weight, n.text->align};
    }
    return st;
  }

  void LowerNode(const DesignNode& n, const DesignNode* parent,
                 std::size_t flow_index, const TagMap& tags,
                 const PropSlots* slots, std::vector<Instruction>& out) {
    if (n.instance) {
      LowerInstance(n, parent, flow_index, out);
      return;
    }
    auto tag_it = tags.find(n.id);
    TagLabel tag = tag_it != tags.end() ? tag_it->second.label
                   : n.kind == NodeKind::kText ? TagLabel::kText
                   : n.kind == NodeKind::kImage ? TagLabel::kImage
                                                : TagLabel::kContainer;
    out.push_back({BeginElement{n.id, std::string(TagName(tag)),
                                ElementFor(tag, n),
                                CssClassFor(n.name, n.kind, n.id),
                                n.origin == NodeOrigin::kSynthesized}});
    SetLayout sl = LayoutFor(n, parent, flow_index);
    if (HasEffect(sl)) out.push_back({sl});
    out.push_back({StyleFor(n, slots)});
    if (n.text) {
      EmitText t{n.text->content, std::nullopt};
      if (slots != nullptr) {
        auto it = slots->find({n.id, PropKind::kText});
        if (it != slots->end()) {
          t.prop = it->second;
          t.content.clear();
        }
      }
      out.push_back({std::move(t)});
    }
    if (n.kind == NodeKind::kImage) {
      EmitImage img{n.image_ref.value_or(""), std::nullopt};
      if (slots != nullptr) {
        auto it = slots->find({n.id, PropKind::kImageRef});
        if (it != slots->end()) {
          img.prop = it->second;
          img.ref.clear();
        }
      }
      out.push_back({std::move(img)});
    }
    std::size_t flow = 0;
    for (const DesignNode& c : n.children) {
      LowerNode(c, &n, flow, tags, slots, out);
      if (c.positioning == Positioning::kFlow) ++flow;
    }
    out.push_back({EndElement{}});
  }

  void LowerInstance(const DesignNode& n, const DesignNode* parent,
                     std::size_t flow_index, std::vector<Instruction>& out) {
    auto def_it = defs_.find(n.instance->component_id);
    auto low_it = lowered_ ? lowered_->find(n.instance->component_id)
                           : std::map<std::string, DefineComponent>::const_iterator();
    if (def_it == defs_.end() || lowered_ == nullptr ||
        low_it == lowered_->end()) {
      throw Error(ErrorCode::kUnresolvedComponent, n.instance->component_id,
                  "instance '" + n.id + "' refers to an undefined component");
    }
    DesignNode expanded = ExpandInstance(n, *def_it->second);
    std::vector<Instruction> concrete;
    LowerNode(expanded, parent, flow_index, tags_, nullptr, concrete);

    std::vector<Slot> mine = ElementSlots(concrete);
    std::vector<Slot> tpl = ElementSlots(low_it->second.body);
    Instantiate inst;
    inst.component_id = n.instance->component_id;
    inst.bindings = n.instance->bindings;
    for (std::size_t k = 0; k < mine.size(); ++k) {
      InstanceNode node;
      node.node_id = mine[k].begin->node_id;
      node.css_class = mine[k].begin->css_class;
      if (mine[k].style->width != tpl[k].style->width) {
        node.width = mine[k].style->width;
      }
      if (mine[k].style->height != tpl[k].style->height) {
        node.height = mine[k].style->height;
      }
      const SetLayout* a = mine[k].layout;
      const SetLayout* b = tpl[k].layout;
      bool same = (a == nullptr && b == nullptr) ||
                  (a != nullptr && b != nullptr && *a == *b);
      if (!same) node.layout = a != nullptr ? *a : SetLayout{};
      inst.nodes.push_back(std::move(node));
    }
    out.push_back({std::move(inst)});
  }

  const TagMap& tags_;
  std::map<std::string, const ComponentDef*> defs_;
  const std::map<std::string, DefineComponent>* lowered_ = nullptr;
};

}  // namespace

InstructionProgram LowerToInstructions(const DesignDocument& doc,
                                       const TagMap& tags,
                                       const std::vector<ComponentDef>& defs) {
  Lowerer lowerer(tags, defs);
  InstructionProgram program;
  std::map<std::string, DefineComponent> lowered;
  for (const ComponentDef& def : defs) {
    DefineComponent dc = lowerer.LowerDefinition(def);
    lowered[def.component_id] = dc;
    program.components.push_back({std::move(dc)});
  }
  for (const Screen& s : doc.screens) {
    ScreenProgram sp;
    sp.screen_id = s.id;
    lowerer.LowerScreen(s, lowered, sp.instructions);
    program.screens.push_back(std::move(sp));
  }
  return program;
}

std::vector<Instruction> ExpandInstantiate(const DefineComponent& def,
                                           const Instantiate& inst) {
  auto binding = [&](const std::string& prop) -> const std::string& {
    auto it = inst.bindings.find(prop);
    if (it == inst.bindings.end()) {
      throw Error(ErrorCode::kMissingBinding, prop,
                  "no binding for prop '" + prop + "' of '" +
                      def.component_id + "'");
    }
    return it->second;
  };
  std::vector<Instruction> out;
  out.reserve(def.body.size());
  std::size_t k = 0;
  const InstanceNode* cur = nullptr;
  bool layout_pending = false;
  for (const Instruction& i : def.body) {
    if (const auto* b = std::get_if<BeginElement>(&i.op)) {
      if (k >= inst.nodes.size()) {
        throw Error(ErrorCode::kAlignment, inst.component_id,
                    "instance has fewer nodes than its template");
      }
      cur = &inst.nodes[k++];
      BeginElement nb = *b;
      nb.node_id = cur->node_id;
      nb.css_class = cur->css_class;
      out.push_back({std::move(nb)});
      layout_pending = cur->layout.has_value();
      continue;
    }
    if (const auto* l = std::get_if<SetLayout>(&i.op)) {
      if (layout_pending) {
        if (HasEffect(*cur->layout)) out.push_back({*cur->layout});
        layout_pending = false;
      } else {
        out.push_back({*l});
      }
      continue;
    }
    if (const auto* s = std::get_if<SetStyle>(&i.op)) {
      if (layout_pending) {
        if (HasEffect(*cur->layout)) out.push_back({*cur->layout});
        layout_pending = false;
      }
      SetStyle ns = *s;
      if (cur != nullptr && cur->width) ns.width = *cur->width;
      if (cur != nullptr && cur->height) ns.height = *cur->height;
      if (ns.fill && ns.fill->prop) {
        ns.fill->color = binding(*ns.fill->prop);
        ns.fill->prop.reset();
      }
      out.push_back({std::move(ns)});
      continue;
    }
    if (const auto* t = std::get_if<EmitText>(&i.op)) {
      EmitText nt = *t;
      if (nt.prop) {
        nt.content = binding(*nt.prop);
        nt.prop.reset();
      }
      out.push_back({std::move(nt)});
      continue;
    }
    if (const auto* img = std::get_if<EmitImage>(&i.op)) {
      EmitImage ni = *img;
      if (ni.prop) {
        ni.ref = binding(*ni.prop);
        ni.prop.reset();
      }
      out.push_back({std::move(ni)});
      continue;
    }
    out.push_back(i);
  }
  if (k != inst.nodes.size()) {
    throw Error(ErrorCode::kAlignment, inst.component_id,
                "instance node count does not match its template");
  }
  return out;
}

namespace {

class TreeBuilder {
 public:
  explicit TreeBuilder(const std::vector<Instruction>& components) {
    for (const Instruction& i : components) {
      if (const auto* d = std::get_if<DefineComponent>(&i.op)) {
        defs_[d->component_id] = d;
      }
    }
  }

  std::vector<ElementNode> Build(const std::vector<Instruction>& instrs) {
    roots_.clear();
    stack_.clear();
    Feed(instrs);
    if (!stack_.empty()) {
      throw Error(ErrorCode::kInvalidArgument, stack_.back().begin.node_id,
                  "BeginElement without matching EndElement");
    }
    return std::move(roots_);
  }

 private:
  void Feed(const std::vector<Instruction>& instrs) {
    for (const Instruction& i : instrs) {
      if (const auto* b = std::get_if<BeginElement>(&i.op)) {
        ElementNode n;
        n.begin = *b;
        stack_.push_back(std::move(n));
      } else if (const auto* l = std::get_if<SetLayout>(&i.op)) {
        Top("SetLayout").layout = *l;
      } else if (const auto* s = std::get_if<SetStyle>(&i.op)) {
        Top("SetStyle").style = *s;
      } else if (const auto* t = std::get_if<EmitText>(&i.op)) {
        Top("EmitText").text = *t;
      } else if (const auto* img = std::get_if<EmitImage>(&i.op)) {
        Top("EmitImage").image = *img;
      } else if (const auto* inst = std::get_if<Instantiate>(&i.op)) {
        auto it = defs_.find(inst->component_id);
        if (it == defs_.end()) {
          throw Error(ErrorCode::kUnresolvedComponent, inst->component_id,
                      "Instantiate of an undefined component");
        }
        Feed(ExpandInstantiate(*it->second, *inst));
      } else if (std::holds_alternative<EndElement>(i.op)) {
        if (stack_.empty()) {
          throw Error(ErrorCode::kInvalidArgument, "",
                      "EndElement without matching BeginElement");
        }
        ElementNode done = std::move(stack_.back());
        stack_.pop_back();
        if (stack_.empty()) {
          roots_.push_back(std::move(done));
        } else {
          stack_.back().children.push_back(std::move(done));
        }
      } else {
        throw Error(ErrorCode::kInvalidArgument, "",
                    "DefineComponent inside a screen instruction list");
      }
    }
  }

  ElementNode& Top(std::string_view op) {
    if (stack_.empty()) {
      throw Error(ErrorCode::kInvalidArgument, std::string(op),
                  "instruction outside of an element");
    }
    return stack_.back();
  }

  std::map<std::string, const DefineComponent*> defs_;
  std::vector<ElementNode> stack_;
  std::vector<ElementNode> roots_;
};

}  // namespace

std::vector<ElementNode> BuildElementTrees(
    const std::vector<Instruction>& instructions,
    const std::vector<Instruction>& components) {
  return TreeBuilder(components).Build(instructions);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

Json PaddingJson(const Padding& p) {
  Json j = Json::object();
  j["top"] = JsonNumber(p.top);
  j["right"] = JsonNumber(p.right);
  j["bottom"] = JsonNumber(p.bottom);
  j["left"] = JsonNumber(p.left);
  return j;
}

void LayoutFields(const SetLayout& l, Json& j) {
  j["position"] = l.position == Positioning::kAbsolute ? "absolute" : "flow";
  if (l.position == Positioning::kAbsolute) {
    j["x"] = JsonNumber(l.x);
    j["y"] = JsonNumber(l.y);
  }
  if (l.margin_top != 0) j["marginTop"] = JsonNumber(l.margin_top);
  if (l.margin_left != 0) j["marginLeft"] = JsonNumber(l.margin_left);
  if (l.flex) {
    Json f = Json::object();
    f["direction"] = DirectionName(l.flex->direction);
    f["gap"] = JsonNumber(l.flex->gap);
    f["padding"] = PaddingJson(l.flex->padding);
    f["align"] = "start";
    f["sizing"] = SizingName(l.flex->sizing);
    j["flex"] = std::move(f);
  }
}

SetLayout LayoutFromFields(const Json& j, const std::string& path) {
  SetLayout l;
  std::string pos = RequireString(j, "position", path);
  if (pos == "absolute") {
    l.position = Positioning::kAbsolute;
    l.x = RequireNumber(j, "x", path);
    l.y = RequireNumber(j, "y", path);
  } else if (pos != "flow") {
    throw Error(ErrorCode::kSchema, path + ".position", "unknown position");
  }
  if (j.contains("marginTop")) l.margin_top = RequireNumber(j, "marginTop", path);
  if (j.contains("marginLeft")) {
    l.margin_left = RequireNumber(j, "marginLeft", path);
  }
  if (j.contains("flex")) {
    AutoLayoutSpec spec = LayoutFromJson(j["flex"], path + ".flex");
    l.flex = FlexLayout{spec.direction, spec.gap, spec.padding, spec.sizing};
  }
  return l;
}

Json PropsJson(const std::vector<PropDef>& props) {
  Json arr = Json::array();
  for (const PropDef& p : props) {
    Json pj = Json::object();
    pj["name"] = p.name;
    pj["kind"] = PropKindName(p.kind);
    pj["path"] = PathString(p.path);
    arr.push_back(std::move(pj));
  }
  return arr;
}

Json InstructionJson(const Instruction& instr);

Json InstructionsJson(const std::vector<Instruction>& list) {
  Json arr = Json::array();
  for (const Instruction& i : list) arr.push_back(InstructionJson(i));
  return arr;
}

Json InstructionJson(const Instruction& instr) {
  Json j = Json::object();
  j["op"] = OpName(instr);
  std::visit(
      [&](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, DefineComponent>) {
          j["componentId"] = op.component_id;
          j["props"] = PropsJson(op.props);
          j["body"] = InstructionsJson(op.body);
        } else if constexpr (std::is_same_v<T, BeginElement>) {
          j["nodeId"] = op.node_id;
          j["tag"] = op.tag;
          j["element"] = op.element;
          j["cssClass"] = op.css_class;
          if (op.synthesized) j["synthesized"] = true;
        } else if constexpr (std::is_same_v<T, SetLayout>) {
          LayoutFields(op, j);
        } else if constexpr (std::is_same_v<T, SetStyle>) {
          j["width"] = JsonNumber(op.width);
          j["height"] = JsonNumber(op.height);
          if (op.fill) {
            Json f = Json::object();
            if (op.fill->prop) {
              f["prop"] = *op.fill->prop;
            } else {
              f["color"] = op.fill->color;
            }
            f["opacity"] = JsonNumber(op.fill->opacity);
            j["fill"] = std::move(f);
          }
          if (op.corner_radius) j["cornerRadius"] = JsonNumber(*op.corner_radius);
          if (op.stroke) {
            j["stroke"] = {{"color", op.stroke->color},
                           {"width", JsonNumber(op.stroke->width)}};
          }
          if (op.typography) {
            j["typography"] = {
                {"fontSize", JsonNumber(op.typography->font_size)},
                {"fontWeight", op.typography->font_weight},
                {"align", TextAlignName(op.typography->align)}};
          }
        } else if constexpr (std::is_same_v<T, EmitText>) {
          if (op.prop) {
            j["prop"] = *op.prop;
          } else {
            j["content"] = op.content;
          }
        } else if constexpr (std::is_same_v<T, EmitImage>) {
          if (op.prop) {
            j["prop"] = *op.prop;
          } else {
            j["ref"] = op.ref;
          }
        } else if constexpr (std::is_same_v<T, Instantiate>) {
          j["componentId"] = op.component_id;
          Json b = Json::object();
          for (const auto& [k, v] : op.bindings) b[k] = v;
          j["bindings"] = std::move(b);
          Json nodes = Json::array();
          for (const InstanceNode& n : op.nodes) {
            Json nj = Json::object();
            nj["nodeId"] = n.node_id;
            nj["cssClass"] = n.css_class;
            if (n.width) nj["width"] = JsonNumber(*n.width);
            if (n.height) nj["height"] = JsonNumber(*n.height);
            if (n.layout) {
              Json lj = Json::object();
              LayoutFields(*n.layout, lj);
              nj["layout"] = std::move(lj);
            }
            nodes.push_back(std::move(nj));
          }
          j["nodes"] = std::move(nodes);
        }
      },
      instr.op);
  return j;
}

TextAlign ParseAlign(const std::string& s, const std::string& path) {
  if (s == "left") return TextAlign::kLeft;
  if (s == "center") return TextAlign::kCenter;
  if (s == "right") return TextAlign::kRight;
  throw Error(ErrorCode::kSchema, path, "unknown alignment '" + s + "'");
}

NodePath ParsePath(const std::string& s, const std::string& where) {
  NodePath path;
  if (s.empty()) return path;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (part.empty() ||
        part.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::kSchema, where, "malformed node path '" + s + "'");
    }
    path.push_back(static_cast<std::size_t>(std::stoull(part)));
  }
  return path;
}

std::optional<PropKind> ParsePropKind(const std::string& s) {
  if (s == "text") return PropKind::kText;
  if (s == "imageRef") return PropKind::kImageRef;
  if (s == "fillColor") return PropKind::kFillColor;
  return std::nullopt;
}

Instruction InstructionFromJson(const Json& j, const std::string& path);

std::vector<Instruction> InstructionsFromJson(const Json& arr,
                                              const std::string& path) {
  if (!arr.is_array()) throw Error(ErrorCode::kSchema, path, "expected an array");
  std::vector<Instruction> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(
        InstructionFromJson(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Instruction InstructionFromJson(const Json& j, const std::string& path) {
  std::string op = RequireString(j, "op", path);
  if (op == "DefineComponent") {
    DefineComponent d;
    d.component_id = RequireString(j, "componentId", path);
    const Json& props = RequireArray(j, "props", path);
    for (std::size_t i = 0; i < props.size(); ++i) {
      std::string pp = path + ".props[" + std::to_string(i) + "]";
      std::string kind = RequireString(props[i], "kind", pp);
      auto pk = ParsePropKind(kind);
      if (!pk) throw Error(ErrorCode::kSchema, pp + ".kind", "unknown prop kind");
      d.props.push_back(PropDef{RequireString(props[i], "name", pp), *pk,
                                ParsePath(RequireString(props[i], "path", pp),
                                          pp + ".path")});
    }
    d.body = InstructionsFromJson(RequireArray(j, "body", path), path + ".body");
    return {std::move(d)};
  }
  if (op == "BeginElement") {
    BeginElement b;
    b.node_id = RequireString(j, "nodeId", path);
    b.tag = RequireString(j, "tag", path);
    b.element = RequireString(j, "element", path);
    b.css_class = RequireString(j, "cssClass", path);
    b.synthesized = j.value("synthesized", false);
    return {std::move(b)};
  }
  if (op == "SetLayout") return {LayoutFromFields(j, path)};
  if (op == "SetStyle") {
    SetStyle s;
    s.width = RequireNumber(j, "width", path);
    s.height = RequireNumber(j, "height", path);
    if (j.contains("fill")) {
      const Json& f = j["fill"];
      FillStyle fs;
      if (f.contains("prop")) {
        fs.prop = RequireString(f, "prop", path + ".fill");
      } else {
        fs.color = RequireString(f, "color", path + ".fill");
      }
      fs.opacity = RequireNumber(f, "opacity", path + ".fill");
      s.fill = std::move(fs);
    }
    if (j.contains("cornerRadius")) {
      s.corner_radius = RequireNumber(j, "cornerRadius", path);
    }
    if (j.contains("stroke")) {
      s.stroke = Stroke{RequireString(j["stroke"], "color", path + ".stroke"),
                        RequireNumber(j["stroke"], "width", path + ".stroke")};
    }
    if (j.contains("typography")) {
      const Json& t = j["typography"];
      std::string tp = path + ".typography";
      s.typography = Typography{
          RequireNumber(t, "fontSize", tp),
          static_cast<int>(RequireNumber(t, "fontWeight", tp)),
          ParseAlign(RequireString(t, "align", tp), tp + ".align")};
    }
    return {std::move(s)};
  }
  if (op == "EmitText") {
    EmitText t;
    if (j.contains("prop")) {
      t.prop = RequireString(j, "prop", path);
    } else {
      t.content = RequireString(j, "content", path);
    }
    return {std::move(t)};
  }
  if (op == "EmitImage") {
    EmitImage img;
    if (j.contains("prop")) {
      img.prop = RequireString(j, "prop", path);
    } else {
      img.ref = RequireString(j, "ref", path);
    }
    return {std::move(img)};
  }
  if (op == "Instantiate") {
    Instantiate inst;
    inst.component_id = RequireString(j, "componentId", path);
    const Json& b = RequireField(j, "bindings", path);
    RequireObject(b, path + ".bindings");
    for (const auto& [k, v] : b.items()) {
      if (!v.is_string()) {
        throw Error(ErrorCode::kSchema, path + ".bindings." + k,
                    "expected a string");
      }
      inst.bindings[k] = v.get<std::string>();
    }
    const Json& nodes = RequireArray(j, "nodes", path);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::string np = path + ".nodes[" + std::to_string(i) + "]";
      InstanceNode n;
      n.node_id = RequireString(nodes[i], "nodeId", np);
      n.css_class = RequireString(nodes[i], "cssClass", np);
      if (nodes[i].contains("width")) n.width = RequireNumber(nodes[i], "width", np);
      if (nodes[i].contains("height")) {
        n.height = RequireNumber(nodes[i], "height", np);
      }
      if (nodes[i].contains("layout")) {
        n.layout = LayoutFromFields(nodes[i]["layout"], np + ".layout");
      }
      inst.nodes.push_back(std::move(n));
    }
    return {std::move(inst)};
  }
  if (op == "EndElement") return {EndElement{}};
  throw Error(ErrorCode::kSchema, path + ".op", "unknown op '" + op + "'");
}

}  // namespace

Json ProgramToJson(const InstructionProgram& program) {
  Json j = Json::object();
  j["components"] = InstructionsJson(program.components);
  Json screens = Json::array();
  for (const ScreenProgram& s : program.screens) {
    Json sj = Json::object();
    sj["id"] = s.screen_id;
    sj["instructions"] = InstructionsJson(s.instructions);
    screens.push_back(std::move(sj));
  }
  j["screens"] = std::move(screens);
  return j;
}

InstructionProgram ProgramFromJson(const Json& json) {
  InstructionProgram program;
  program.components =
      InstructionsFromJson(RequireArray(json, "components", "$"),
                           "$.components");
  for (const Instruction& i : program.components) {
    if (!std::holds_alternative<DefineComponent>(i.op)) {
      throw Error(ErrorCode::kSchema, "$.components",
                  "only DefineComponent may appear here");
    }
  }
  const Json& screens = RequireArray(json, "screens", "$");
  for (std::size_t i = 0; i < screens.size(); ++i) {
    std::string sp = "$.screens[" + std::to_string(i) + "]";
    ScreenProgram s;
    s.screen_id = RequireString(screens[i], "id", sp);
    s.instructions = InstructionsFromJson(
        RequireArray(screens[i], "instructions", sp), sp + ".instructions");
    program.screens.push_back(std::move(s));
  }
  return program;
}

// ---------------------------------------------------------------------------
// HTML / CSS

namespace {

std::string Px(double v) { return FormatNumber(v) + "px"; }

std::string EscapeHtml(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&#39;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string ColorValue(const FillStyle& f) {
  if (f.opacity >= 1 || f.color.size() != 7) return f.color;
  auto channel = [&](std::size_t at) {
    return std::stoi(f.color.substr(at, 2), nullptr, 16);
  };
  return "rgba(" + std::to_string(channel(1)) + ", " +
         std::to_string(channel(3)) + ", " + std::to_string(channel(5)) +
         ", " + FormatNumber(f.opacity) + ")";
}

// Property order is fixed: positioning, margins, flex container, sizing,
// paint, typography.
void EmitRule(const ElementNode& e, bool is_root, std::string& css) {
  std::vector<std::pair<std::string, std::string>> props;
  const SetLayout layout = e.layout.value_or(SetLayout{});
  bool absolute = !is_root && layout.position == Positioning::kAbsolute;
  props.emplace_back("position", absolute ? "absolute" : "relative");
  if (absolute) {
    props.emplace_back("left", Px(layout.x));
    props.emplace_back("top", Px(layout.y));
  }
  if (layout.margin_top != 0) props.emplace_back("margin-top", Px(layout.margin_top));
  if (layout.margin_left != 0) {
    props.emplace_back("margin-left", Px(layout.margin_left));
  }
  if (layout.flex) {
    const FlexLayout& f = *layout.flex;
    const Padding& p = f.padding;
    props.emplace_back("display", "flex");
    props.emplace_back("flex-direction",
                       f.direction == Direction::kRow ? "row" : "column");
    props.emplace_back("gap", Px(f.gap));
    props.emplace_back("padding", Px(p.top) + " " + Px(p.right) + " " +
                                      Px(p.bottom) + " " + Px(p.left));
    props.emplace_back("align-items", "flex-start");
  }
  props.emplace_back("flex-shrink", "0");
  props.emplace_back("box-sizing", "border-box");
  props.emplace_back("width", Px(e.style.width));
  props.emplace_back("height", Px(e.style.height));
  if (e.style.fill) {
    props.emplace_back(e.text ? "color" : "background-color",
                       ColorValue(*e.style.fill));
  }
  if (e.style.corner_radius) {
    props.emplace_back("border-radius", Px(*e.style.corner_radius));
  }
  if (e.style.stroke) {
    props.emplace_back("box-shadow", "inset 0 0 0 " + Px(e.style.stroke->width) +
                                         " " + e.style.stroke->color);
  }
  if (e.style.typography) {
    props.emplace_back("font-size", Px(e.style.typography->font_size));
    props.emplace_back("font-weight",
                       std::to_string(e.style.typography->font_weight));
    props.emplace_back("text-align",
                       std::string(TextAlignName(e.style.typography->align)));
  }
  css += "." + e.begin.css_class + " {\n";
  for (const auto& [k, v] : props) css += "  " + k + ": " + v + ";\n";
  css += "}\n";
  for (const ElementNode& c : e.children) EmitRule(c, false, css);
}

std::optional<std::string> FirstText(const ElementNode& e) {
  if (e.text) return e.text->content;
  for (const ElementNode& c : e.children) {
    if (auto t = FirstText(c)) return t;
  }
  return std::nullopt;
}

std::string InputType(std::string_view tag) {
  if (tag == "checkbox" || tag == "switch") return "checkbox";
  if (tag == "radio") return "radio";
  if (tag == "date_time_picker") return "datetime-local";
  return "text";
}

void EmitMarkup(const ElementNode& e, int depth, std::string& html) {
  std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string& el = e.begin.element;
  std::string attrs = " class=\"" + e.begin.css_class + "\"";
  auto tag = ParseTag(e.begin.tag);
  if (el == "div" && tag && IsBigTag(*tag)) {
    attrs += " data-tag=\"" + e.begin.tag + "\"";
  }
  if (el == "input") {
    attrs += " type=\"" + InputType(e.begin.tag) + "\"";
    if (e.begin.tag == "switch") attrs += " role=\"switch\"";
    if (e.begin.tag == "input") {
      if (auto t = FirstText(e)) attrs += " placeholder=\"" + EscapeHtml(*t) + "\"";
    }
    html += indent + "<input" + attrs + ">\n";
    return;
  }
  if (el == "textarea") {
    if (auto t = FirstText(e)) attrs += " placeholder=\"" + EscapeHtml(*t) + "\"";
    html += indent + "<textarea" + attrs + "></textarea>\n";
    return;
  }
  if (el == "select") {
    std::string label = FirstText(e).value_or("");
    html += indent + "<select" + attrs + "><option>" + EscapeHtml(label) +
            "</option></select>\n";
    return;
  }
  if (el == "img") {
    std::string src = e.image ? e.image->ref : "";
    html += indent + "<img" + attrs + " src=\"" + EscapeHtml(src) + "\" alt=\"\">\n";
    return;
  }
  if (el == "button") attrs += " type=\"button\"";
  if (e.text && e.children.empty()) {
    html += indent + "<" + el + attrs + ">" + EscapeHtml(e.text->content) +
            "</" + el + ">\n";
    return;
  }
  html += indent + "<" + el + attrs + ">\n";
  if (e.text) html += indent + "  " + EscapeHtml(e.text->content) + "\n";
  for (const ElementNode& c : e.children) EmitMarkup(c, depth + 1, html);
  html += indent + "</" + el + ">\n";
}

constexpr std::string_view kBaseCss =
    "* {\n"
    "  margin: 0;\n"
    "  padding: 0;\n"
    "  box-sizing: border-box;\n"
    "}\n"
    "button, input, select, textarea {\n"
    "  border: none;\n"
    "  background: none;\n"
    "  font: inherit;\n"
    "}\n";

}  // namespace

EmittedSources EmitHtmlCss(const InstructionProgram& program) {
  std::string html =
      "<!DOCTYPE html>\n"
      "<html lang=\"en\">\n"
      "  <head>\n"
      "    <meta charset=\"utf-8\">\n"
      "    <link rel=\"stylesheet\" href=\"style.css\">\n"
      "  </head>\n"
      "  <body>\n";
  std::string css(kBaseCss);
  for (const ScreenProgram& s : program.screens) {
    for (const ElementNode& root :
         BuildElementTrees(s.instructions, program.components)) {
      html += "    <!-- screen " + EscapeHtml(s.screen_id) + " -->\n";
      EmitMarkup(root, 2, html);
      EmitRule(root, true, css);
    }
  }
  html += "  </body>\n</html>\n";
  EmittedSources out;
  out.files["index.html"] = std::move(html);
  out.files["style.css"] = std::move(css);
  out.files["instructions.json"] = Dump(ProgramToJson(program));
  return out;
}

}  // namespace ldmf
