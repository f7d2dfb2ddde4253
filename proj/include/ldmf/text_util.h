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

#ifndef LDMF_TEXT_UTIL_H_
#define LDMF_TEXT_UTIL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ldmf {

// Lowercased maximal runs of ASCII letters and digits.
std::vector<std::string> NameTokens(std::string_view name);

// "Product Card" -> "productCard"; empty input -> `fallback`.
std::string CamelIdentifier(std::string_view name, std::string_view fallback);
// "Product Card" -> "ProductCard".
std::string PascalIdentifier(std::string_view name, std::string_view fallback);
// "Product Card" -> "product-card".
std::string KebabIdentifier(std::string_view name, std::string_view fallback);

// Number of code points in UTF-8 text.
std::size_t Utf8Length(std::string_view text);

// Shortest round-trip decimal representation.
std::string FormatNumber(double value);

}  // namespace ldmf

#endif  // LDMF_TEXT_UTIL_H_
