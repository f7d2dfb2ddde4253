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

#include "ldmf/error.h"

#include <string>

namespace ldmf {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax:
      return "SyntaxError";
    case ErrorCode::kSchema:
      return "SchemaError";
    case ErrorCode::kDuplicateId:
      return "DuplicateId";
    case ErrorCode::kNonUniformAxis:
      return "NonUniformAxis";
    case ErrorCode::kAlignment:
      return "AlignmentError";
    case ErrorCode::kUnknownComponent:
      return "UnknownComponent";
    case ErrorCode::kMissingBinding:
      return "MissingBinding";
    case ErrorCode::kUnresolvedComponent:
      return "UnresolvedComponent";
    case ErrorCode::kEmptyScreen:
      return "EmptyScreen";
    case ErrorCode::kIdMismatch:
      return "IdMismatch";
    case ErrorCode::kEmptyList:
      return "EmptyList";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Error";
}

namespace {

std::string Describe(ErrorCode code, const std::string& path,
                     const std::string& detail) {
  std::string out(ErrorCodeName(code));
  if (!path.empty()) out += " at " + path;
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string path, const std::string& detail)
    : std::runtime_error(Describe(code, path, detail)),
      code_(code),
      path_(std::move(path)) {}

}  // namespace ldmf
