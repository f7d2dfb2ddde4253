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

#include "ldmf/text_util.h"

#include <cctype>
#include <charconv>
#include <cmath>

namespace ldmf {

std::vector<std::string> NameTokens(std::string_view name) {
  std::vector<std::string> tokens;
  std::string cur;
  for (unsigned char c : name) {
    if (std::isalnum(c) != 0) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

namespace {

std::string Joined(std::string_view name, std::string_view fallback,
                   bool capitalize_first, std::string_view sep,
                   bool capitalize_rest) {
  std::vector<std::string> tokens = NameTokens(name);
  if (tokens.empty()) tokens = NameTokens(fallback);
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string t = tokens[i];
    bool cap = i == 0 ? capitalize_first : capitalize_rest;
    if (cap) t[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    if (i > 0) out += sep;
    out += t;
  }
  if (!out.empty() && std::isdigit(static_cast<unsigned char>(out[0])) != 0) {
    out = std::string(capitalize_first ? "N" : "n") + std::string(sep) + out;
  }
  return out;
}

}  // namespace

std::string CamelIdentifier(std::string_view name, std::string_view fallback) {
  return Joined(name, fallback, false, "", true);
}

std::string PascalIdentifier(std::string_view name,
                             std::string_view fallback) {
  return Joined(name, fallback, true, "", true);
}

std::string KebabIdentifier(std::string_view name, std::string_view fallback) {
  return Joined(name, fallback, false, "-", false);
}

std::size_t Utf8Length(std::string_view text) {
  std::size_t n = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string FormatNumber(double value) {
  if (value == 0) return "0";
  if (std::trunc(value) == value && std::fabs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

}  // namespace ldmf
