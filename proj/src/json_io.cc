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

#include "ldmf/json_io.h"

#include <cmath>
#include <cstdint>
#include <string>

namespace ldmf {

Json JsonNumber(double value) {
  constexpr double kMaxExactInt = 9007199254740992.0;  // 2^53
  if (std::isfinite(value) && std::trunc(value) == value &&
      std::fabs(value) < kMaxExactInt) {
    return Json(static_cast<std::int64_t>(value));
  }
  return Json(value);
}

std::string Dump(const Json& json) { return json.dump(2) + "\n"; }

Json ParseJsonText(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSyntax, "byte " + std::to_string(e.byte),
                e.what());
  }
}

void RequireObject(const Json& value, const std::string& path) {
  if (!value.is_object()) {
    throw Error(ErrorCode::kSchema, path, "expected an object");
  }
}

const Json& RequireField(const Json& obj, std::string_view key,
                         const std::string& path) {
  RequireObject(obj, path);
  auto it = obj.find(std::string(key));
  if (it == obj.end()) {
    throw Error(ErrorCode::kSchema, path + "." + std::string(key),
                "missing required field");
  }
  return *it;
}

double RequireNumber(const Json& obj, std::string_view key,
                     const std::string& path) {
  const Json& v = RequireField(obj, key, path);
  if (!v.is_number()) {
    throw Error(ErrorCode::kSchema, path + "." + std::string(key),
                "expected a number");
  }
  return v.get<double>();
}

std::string RequireString(const Json& obj, std::string_view key,
                          const std::string& path) {
  const Json& v = RequireField(obj, key, path);
  if (!v.is_string()) {
    throw Error(ErrorCode::kSchema, path + "." + std::string(key),
                "expected a string");
  }
  return v.get<std::string>();
}

const Json& RequireArray(const Json& obj, std::string_view key,
                         const std::string& path) {
  const Json& v = RequireField(obj, key, path);
  if (!v.is_array()) {
    throw Error(ErrorCode::kSchema, path + "." + std::string(key),
                "expected an array");
  }
  return v;
}

std::string_view DirectionName(Direction d) {
  return d == Direction::kRow ? "row" : "column";
}

std::string_view SizingName(Sizing s) {
  return s == Sizing::kHug ? "hug" : "fixed";
}

std::string_view TextAlignName(TextAlign a) {
  switch (a) {
    case TextAlign::kLeft:
      return "left";
    case TextAlign::kCenter:
      return "center";
    case TextAlign::kRight:
      return "right";
  }
  return "left";
}

namespace {

Json NumberArray(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(JsonNumber(v));
  return out;
}

std::vector<double> NumberArrayFromJson(const Json& arr,
                                        const std::string& path) {
  std::vector<double> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      throw Error(ErrorCode::kSchema, path + "[" + std::to_string(i) + "]",
                  "expected a number");
    }
    out.push_back(arr[i].get<double>());
  }
  return out;
}

const Json* OptionalField(const Json& obj, std::string_view key) {
  auto it = obj.find(std::string(key));
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

}  // namespace

Json RectToJson(const Rect& r) {
  Json j = Json::object();
  j["x"] = JsonNumber(r.x);
  j["y"] = JsonNumber(r.y);
  j["w"] = JsonNumber(r.w);
  j["h"] = JsonNumber(r.h);
  return j;
}

Json LayoutToJson(const AutoLayoutSpec& spec) {
  Json j = Json::object();
  j["direction"] = DirectionName(spec.direction);
  j["gap"] = JsonNumber(spec.gap);
  Json pad = Json::object();
  pad["top"] = JsonNumber(spec.padding.top);
  pad["right"] = JsonNumber(spec.padding.right);
  pad["bottom"] = JsonNumber(spec.padding.bottom);
  pad["left"] = JsonNumber(spec.padding.left);
  j["padding"] = std::move(pad);
  j["align"] = "start";
  j["sizing"] = SizingName(spec.sizing);
  if (!spec.leading_margins.empty()) {
    j["leadingMargins"] = NumberArray(spec.leading_margins);
  }
  if (!spec.cross_offsets.empty()) {
    j["crossOffsets"] = NumberArray(spec.cross_offsets);
  }
  return j;
}

AutoLayoutSpec LayoutFromJson(const Json& json, const std::string& path) {
  RequireObject(json, path);
  AutoLayoutSpec spec;
  std::string dir = RequireString(json, "direction", path);
  if (dir == "row") {
    spec.direction = Direction::kRow;
  } else if (dir == "column") {
    spec.direction = Direction::kColumn;
  } else {
    throw Error(ErrorCode::kSchema, path + ".direction",
                "unknown direction '" + dir + "'");
  }
  spec.gap = RequireNumber(json, "gap", path);
  const Json& pad = RequireField(json, "padding", path);
  spec.padding.top = RequireNumber(pad, "top", path + ".padding");
  spec.padding.right = RequireNumber(pad, "right", path + ".padding");
  spec.padding.bottom = RequireNumber(pad, "bottom", path + ".padding");
  spec.padding.left = RequireNumber(pad, "left", path + ".padding");
  if (const Json* sizing = OptionalField(json, "sizing")) {
    if (*sizing == "hug") {
      spec.sizing = Sizing::kHug;
    } else if (*sizing == "fixed") {
      spec.sizing = Sizing::kFixed;
    } else {
      throw Error(ErrorCode::kSchema, path + ".sizing", "unknown sizing");
    }
  }
  if (OptionalField(json, "leadingMargins")) {
    spec.leading_margins = NumberArrayFromJson(
        RequireArray(json, "leadingMargins", path), path + ".leadingMargins");
  }
  if (OptionalField(json, "crossOffsets")) {
    spec.cross_offsets = NumberArrayFromJson(
        RequireArray(json, "crossOffsets", path), path + ".crossOffsets");
  }
  return spec;
}

Json NodeToJson(const DesignNode& node) {
  Json j = Json::object();
  j["id"] = node.id;
  j["name"] = node.name;
  j["kind"] = NodeKindName(node.kind);
  j["x"] = JsonNumber(node.bounds.x);
  j["y"] = JsonNumber(node.bounds.y);
  j["w"] = JsonNumber(node.bounds.w);
  j["h"] = JsonNumber(node.bounds.h);
  if (node.fill) {
    j["fill"] = {{"color", node.fill->color},
                 {"opacity", JsonNumber(node.fill->opacity)}};
  }
  if (node.corner_radius) j["cornerRadius"] = JsonNumber(*node.corner_radius);
  if (node.stroke) {
    j["stroke"] = {{"color", node.stroke->color},
                   {"width", JsonNumber(node.stroke->width)}};
  }
  if (node.text) {
    j["text"] = {{"content", node.text->content},
                 {"fontSize", JsonNumber(node.text->font_size)},
                 {"fontWeight", node.text->font_weight},
                 {"align", TextAlignName(node.text->align)}};
  }
  if (node.image_ref) j["imageRef"] = *node.image_ref;
  if (node.positioning == Positioning::kAbsolute) j["positioning"] = "absolute";
  if (node.origin == NodeOrigin::kSynthesized) j["origin"] = "synthesized";
  if (node.layout) j["layout"] = LayoutToJson(*node.layout);
  if (node.instance) {
    Json inst = Json::object();
    inst["componentId"] = node.instance->component_id;
    Json bindings = Json::object();
    for (const auto& [k, v] : node.instance->bindings) bindings[k] = v;
    inst["bindings"] = std::move(bindings);
    Json nodes = Json::array();
    for (const NodeOverlay& o : node.instance->nodes) {
      Json oj = Json::object();
      oj["id"] = o.id;
      oj["name"] = o.name;
      oj["x"] = JsonNumber(o.bounds.x);
      oj["y"] = JsonNumber(o.bounds.y);
      oj["w"] = JsonNumber(o.bounds.w);
      oj["h"] = JsonNumber(o.bounds.h);
      if (o.layout) oj["layout"] = LayoutToJson(*o.layout);
      nodes.push_back(std::move(oj));
    }
    inst["nodes"] = std::move(nodes);
    j["instance"] = std::move(inst);
  }
  Json children = Json::array();
  for (const DesignNode& c : node.children) children.push_back(NodeToJson(c));
  j["children"] = std::move(children);
  return j;
}

namespace {

Rect RectFromJson(const Json& json, const std::string& path) {
  return Rect{RequireNumber(json, "x", path), RequireNumber(json, "y", path),
              RequireNumber(json, "w", path), RequireNumber(json, "h", path)};
}

}  // namespace

DesignNode NodeFromJson(const Json& json, const std::string& path) {
  RequireObject(json, path);
  DesignNode node;
  node.id = RequireString(json, "id", path);
  node.name = RequireString(json, "name", path);
  std::string kind = RequireString(json, "kind", path);
  auto parsed_kind = ParseNodeKind(kind);
  if (!parsed_kind) {
    throw Error(ErrorCode::kSchema, path + ".kind",
                "unknown kind '" + kind + "'");
  }
  node.kind = *parsed_kind;
  node.bounds = RectFromJson(json, path);

  if (const Json* fill = OptionalField(json, "fill")) {
    std::string fp = path + ".fill";
    node.fill = Fill{RequireString(*fill, "color", fp), 1.0};
    if (OptionalField(*fill, "opacity")) {
      node.fill->opacity = RequireNumber(*fill, "opacity", fp);
    }
  }
  if (OptionalField(json, "cornerRadius")) {
    node.corner_radius = RequireNumber(json, "cornerRadius", path);
  }
  if (const Json* stroke = OptionalField(json, "stroke")) {
    std::string sp = path + ".stroke";
    node.stroke = Stroke{RequireString(*stroke, "color", sp),
                         RequireNumber(*stroke, "width", sp)};
  }
  if (const Json* text = OptionalField(json, "text")) {
    std::string tp = path + ".text";
    TextPayload payload;
    payload.content = RequireString(*text, "content", tp);
    payload.font_size = RequireNumber(*text, "fontSize", tp);
    payload.font_weight =
        static_cast<int>(RequireNumber(*text, "fontWeight", tp));
    std::string align = RequireString(*text, "align", tp);
    if (align == "left") {
      payload.align = TextAlign::kLeft;
    } else if (align == "center") {
      payload.align = TextAlign::kCenter;
    } else if (align == "right") {
      payload.align = TextAlign::kRight;
    } else {
      throw Error(ErrorCode::kSchema, tp + ".align",
                  "unknown alignment '" + align + "'");
    }
    node.text = std::move(payload);
  }
  if (OptionalField(json, "imageRef")) {
    node.image_ref = RequireString(json, "imageRef", path);
  }
  if (const Json* pos = OptionalField(json, "positioning")) {
    if (*pos == "absolute") {
      node.positioning = Positioning::kAbsolute;
    } else if (*pos != "flow") {
      throw Error(ErrorCode::kSchema, path + ".positioning",
                  "expected flow or absolute");
    }
  }
  if (const Json* origin = OptionalField(json, "origin")) {
    if (*origin == "synthesized") {
      node.origin = NodeOrigin::kSynthesized;
    } else if (*origin != "original") {
      throw Error(ErrorCode::kSchema, path + ".origin",
                  "expected original or synthesized");
    }
  }
  if (const Json* layout = OptionalField(json, "layout")) {
    node.layout = LayoutFromJson(*layout, path + ".layout");
  }
  if (const Json* inst = OptionalField(json, "instance")) {
    std::string ip = path + ".instance";
    InstanceRef ref;
    ref.component_id = RequireString(*inst, "componentId", ip);
    const Json& bindings = RequireField(*inst, "bindings", ip);
    RequireObject(bindings, ip + ".bindings");
    for (const auto& [k, v] : bindings.items()) {
      if (!v.is_string()) {
        throw Error(ErrorCode::kSchema, ip + ".bindings." + k,
                    "expected a string");
      }
      ref.bindings[k] = v.get<std::string>();
    }
    const Json& nodes = RequireArray(*inst, "nodes", ip);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::string np = ip + ".nodes[" + std::to_string(i) + "]";
      NodeOverlay o;
      o.id = RequireString(nodes[i], "id", np);
      o.name = RequireString(nodes[i], "name", np);
      o.bounds = RectFromJson(nodes[i], np);
      if (const Json* l = OptionalField(nodes[i], "layout")) {
        o.layout = LayoutFromJson(*l, np + ".layout");
      }
      ref.nodes.push_back(std::move(o));
    }
    node.instance = std::move(ref);
  }
  const Json& children = RequireArray(json, "children", path);
  node.children.reserve(children.size());
  for (std::size_t i = 0; i < children.size(); ++i) {
    node.children.push_back(NodeFromJson(
        children[i], path + ".children[" + std::to_string(i) + "]"));
  }
  return node;
}

}  // namespace ldmf
