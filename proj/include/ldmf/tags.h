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

// UI tag taxonomy: small tags (atomic widgets), big tags (composite
// structures) and the neutral fallbacks, in fixed taxonomy order. That order
// is also the classifier's tie-break order.

#ifndef LDMF_TAGS_H_
#define LDMF_TAGS_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace ldmf {

enum class TagLabel {
  // Small tags.
  kDateTimePicker,
  kButton,
  kSelect,
  kInput,
  kCheckbox,
  kRadio,
  kTextarea,
  kDropdown,
  kSwitch,
  // Big tags.
  kAudioPlayer,
  kDrawer,
  kFileUpload,
  kGoogleMaps,
  kGrid,
  kPopups,
  kProgress,
  kSlider,
  kVideo,
  kQuantitySelector,
  // Neutral.
  kText,
  kImage,
  kContainer,
};

inline constexpr std::size_t kTagCount = 22;

std::string_view TagName(TagLabel tag);
std::optional<TagLabel> ParseTag(std::string_view name);

bool IsSmallTag(TagLabel tag);
bool IsBigTag(TagLabel tag);
bool IsNeutralTag(TagLabel tag);

// Taxonomy order.
std::span<const TagLabel> AllTags();
std::span<const TagLabel> SmallTags();
std::span<const TagLabel> BigTags();

struct TagAssignment {
  TagLabel label = TagLabel::kContainer;
  double confidence = 0;
  bool operator==(const TagAssignment&) const = default;
};

using TagMap = std::map<std::string, TagAssignment>;

}  // namespace ldmf

#endif  // LDMF_TAGS_H_
