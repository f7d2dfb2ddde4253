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

#ifndef LDMF_HASH_H_
#define LDMF_HASH_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace ldmf {

// FNV-1a, 64-bit. Stable across platforms, unlike std::hash.
std::uint64_t Fnv1a64(std::string_view data);

struct Digest128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  auto operator<=>(const Digest128&) const = default;
  std::string hex() const;
};

// FNV-1a, 128-bit.
Digest128 Fnv1a128(std::string_view data);

// Lowercase hex of the low `digits` nibbles of `value`.
std::string HexSuffix(std::uint64_t value, int digits);

}  // namespace ldmf

#endif  // LDMF_HASH_H_
