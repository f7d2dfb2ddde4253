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

#include "ldmf/tags.h"

namespace ldmf {

namespace {

constexpr std::array<TagLabel, kTagCount> kAll = {
    TagLabel::kDateTimePicker, TagLabel::kButton,     TagLabel::kSelect,
    TagLabel::kInput,          TagLabel::kCheckbox,   TagLabel::kRadio,
    TagLabel::kTextarea,       TagLabel::kDropdown,   TagLabel::kSwitch,
    TagLabel::kAudioPlayer,    TagLabel::kDrawer,     TagLabel::kFileUpload,
    TagLabel::kGoogleMaps,     TagLabel::kGrid,       TagLabel::kPopups,
    TagLabel::kProgress,       TagLabel::kSlider,     TagLabel::kVideo,
    TagLabel::kQuantitySelector, TagLabel::kText,     TagLabel::kImage,
    TagLabel::kContainer,
};

constexpr std::array<std::string_view, kTagCount> kNames = {
    "date_time_picker", "button",       "select",
    "input",            "checkbox",     "radio",
    "textarea",         "dropdown",     "switch",
    "audio_player",     "drawer",       "file_upload",
    "google_maps",      "grid",         "popups",
    "progress",         "slider",       "video",
    "quantity_selector", "text",        "image",
    "container",
};

constexpr std::size_t kSmallEnd = 9;
constexpr std::size_t kBigEnd = 19;

}  // namespace

std::string_view TagName(TagLabel tag) {
  return kNames[static_cast<std::size_t>(tag)];
}

std::optional<TagLabel> ParseTag(std::string_view name) {
  for (std::size_t i = 0; i < kTagCount; ++i) {
    if (kNames[i] == name) return kAll[i];
  }
  return std::nullopt;
}

bool IsSmallTag(TagLabel tag) {
  return static_cast<std::size_t>(tag) < kSmallEnd;
}

bool IsBigTag(TagLabel tag) {
  auto i = static_cast<std::size_t>(tag);
  return i >= kSmallEnd && i < kBigEnd;
}

bool IsNeutralTag(TagLabel tag) {
  return static_cast<std::size_t>(tag) >= kBigEnd;
}

std::span<const TagLabel> AllTags() { return kAll; }

std::span<const TagLabel> SmallTags() {
  return std::span<const TagLabel>(kAll).subspan(0, kSmallEnd);
}

std::span<const TagLabel> BigTags() {
  return std::span<const TagLabel>(kAll).subspan(kSmallEnd,
                                                 kBigEnd - kSmallEnd);
}

}  // namespace ldmf
