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

// Lowering of an optimized, tagged, componentized document into a flat
// instruction list, and HTML/CSS emission from that list.
//
// Per element the lowering emits, in order:
//   BeginElement, [SetLayout], SetStyle, [EmitText | EmitImage],
//   <children>, EndElement
// SetLayout is present when the element is a flex container, is absolutely
// positioned, or carries flow margins. Component templates are emitted once
// as DefineComponent; each occurrence becomes an Instantiate carrying the
// bindings and the per-node ids and geometry that differ from the template.

#ifndef LDMF_CODEGEN_H_
#define LDMF_CODEGEN_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ldmf/componentizer.h"
#include "ldmf/design_ir.h"
#include "ldmf/json_io.h"
#include "ldmf/tags.h"

namespace ldmf {

struct Instruction;

struct DefineComponent {
  std::string component_id;
  std::vector<PropDef> props;
  std::vector<Instruction> body;
  bool operator==(const DefineComponent&) const;
};

struct BeginElement {
  std::string node_id;
  std::string tag;      // TagLabel name
  std::string element;  // HTML element name
  std::string css_class;
  bool synthesized = false;
  bool operator==(const BeginElement&) const = default;
};

struct FlexLayout {
  Direction direction = Direction::kColumn;
  double gap = 0;
  Padding padding;
  Sizing sizing = Sizing::kFixed;
  bool operator==(const FlexLayout&) const = default;
};

struct SetLayout {
  Positioning position = Positioning::kFlow;
  // Offsets from the parent's origin when absolute.
  double x = 0;
  double y = 0;
  // Flow margins, already resolved to physical axes.
  double margin_top = 0;
  double margin_left = 0;
  std::optional<FlexLayout> flex;
  bool operator==(const SetLayout&) const = default;
};

struct FillStyle {
  std::string color;
  std::optional<std::string> prop;  // prop ref inside component templates
  double opacity = 1;
  bool operator==(const FillStyle&) const = default;
};

struct Typography {
  double font_size = 16;
  int font_weight = 400;
  TextAlign align = TextAlign::kLeft;
  bool operator==(const Typography&) const = default;
};

struct SetStyle {
  double width = 0;
  double height = 0;
  std::optional<FillStyle> fill;
  std::optional<double> corner_radius;
  std::optional<Stroke> stroke;
  std::optional<Typography> typography;
  bool operator==(const SetStyle&) const = default;
};

struct EmitText {
  std::string content;
  std::optional<std::string> prop;
  bool operator==(const EmitText&) const = default;
};

struct EmitImage {
  std::string ref;
  std::optional<std::string> prop;
  bool operator==(const EmitImage&) const = default;
};

// Per template node (template preorder) data of one instance.
struct InstanceNode {
  std::string node_id;
  std::string css_class;
  std::optional<double> width;   // set when different from the template
  std::optional<double> height;  // set when different from the template
  std::optional<SetLayout> layout;
  bool operator==(const InstanceNode&) const = default;
};

struct Instantiate {
  std::string component_id;
  std::map<std::string, std::string> bindings;
  std::vector<InstanceNode> nodes;
  bool operator==(const Instantiate&) const = default;
};

struct EndElement {
  bool operator==(const EndElement&) const = default;
};

using InstructionOp =
    std::variant<DefineComponent, BeginElement, SetLayout, SetStyle, EmitText,
                 EmitImage, Instantiate, EndElement>;

struct Instruction {
  InstructionOp op;
  bool operator==(const Instruction&) const = default;
};

std::string_view OpName(const Instruction& instr);

struct ScreenProgram {
  std::string screen_id;
  std::vector<Instruction> instructions;
  bool operator==(const ScreenProgram&) const = default;
};

struct InstructionProgram {
  // DefineComponent instructions only; precede every screen.
  std::vector<Instruction> components;
  std::vector<ScreenProgram> screens;
  bool operator==(const InstructionProgram&) const = default;
};

// Class name: sanitized layer name + "-" + 6 hex chars of the id hash.
std::string CssClassFor(std::string_view name, NodeKind kind,
                        std::string_view node_id);

// HTML element for a tagged node.
std::string ElementFor(TagLabel tag, const DesignNode& node);

// Throws Error{kUnresolvedComponent} if an instance names a component that
// is not in `defs`.
InstructionProgram LowerToInstructions(const DesignDocument& doc,
                                       const TagMap& tags,
                                       const std::vector<ComponentDef>& defs);

// Replaces an Instantiate by the element instructions of its template with
// ids, classes, geometry and bindings applied.
std::vector<Instruction> ExpandInstantiate(const DefineComponent& def,
                                           const Instantiate& inst);

// Element tree rebuilt from a balanced instruction list, with Instantiate
// expanded. Throws Error{kInvalidArgument} on unbalanced Begin/End and
// Error{kUnresolvedComponent} for unknown components.
struct ElementNode {
  BeginElement begin;
  std::optional<SetLayout> layout;
  SetStyle style;
  std::optional<EmitText> text;
  std::optional<EmitImage> image;
  std::vector<ElementNode> children;
};

std::vector<ElementNode> BuildElementTrees(
    const std::vector<Instruction>& instructions,
    const std::vector<Instruction>& components);

Json ProgramToJson(const InstructionProgram& program);
InstructionProgram ProgramFromJson(const Json& json);

struct EmittedSources {
  // index.html, style.css, instructions.json
  std::map<std::string, std::string> files;
};

EmittedSources EmitHtmlCss(const InstructionProgram& program);

}  // namespace ldmf

#endif  // LDMF_CODEGEN_H_
