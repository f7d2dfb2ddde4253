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

// JSON helpers shared by every serializer in the project. All emitted JSON
// goes through Dump() so that byte output is stable.

#ifndef LDMF_JSON_IO_H_
#define LDMF_JSON_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "ldmf/design_ir.h"

namespace ldmf {

using Json = nlohmann::ordered_json;

// Integral values are stored as integers so they print without ".0".
Json JsonNumber(double value);

// 2-space indentation, LF line endings, trailing newline.
std::string Dump(const Json& json);

// Parses text, mapping parser failures to Error{kSyntax} with a byte offset.
Json ParseJsonText(std::string_view text);

// Typed field readers that throw Error{kSchema} naming `path`.
const Json& RequireField(const Json& obj, std::string_view key,
                         const std::string& path);
double RequireNumber(const Json& obj, std::string_view key,
                     const std::string& path);
std::string RequireString(const Json& obj, std::string_view key,
                          const std::string& path);
const Json& RequireArray(const Json& obj, std::string_view key,
                         const std::string& path);
void RequireObject(const Json& value, const std::string& path);

Json RectToJson(const Rect& r);
Json LayoutToJson(const AutoLayoutSpec& spec);
AutoLayoutSpec LayoutFromJson(const Json& json, const std::string& path);

Json NodeToJson(const DesignNode& node);
DesignNode NodeFromJson(const Json& json, const std::string& path);

std::string_view DirectionName(Direction d);
std::string_view SizingName(Sizing s);
std::string_view TextAlignName(TextAlign a);

}  // namespace ldmf

#endif  // LDMF_JSON_IO_H_
