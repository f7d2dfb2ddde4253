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

#ifndef LDMF_ERROR_H_
#define LDMF_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ldmf {

enum class ErrorCode {
  kSyntax,
  kSchema,
  kDuplicateId,
  kNonUniformAxis,
  kAlignment,
  kUnknownComponent,
  kMissingBinding,
  kUnresolvedComponent,
  kEmptyScreen,
  kIdMismatch,
  kEmptyList,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every recoverable failure in the pipeline is reported through this type.
// `path` locates the offending element (a JSON path, a node id, a prop name)
// and may be empty.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string path, const std::string& detail);

  ErrorCode code() const { return code_; }
  const std::string& path() const { return path_; }

 private:
  ErrorCode code_;
  std::string path_;
};

}  // namespace ldmf

#endif  // LDMF_ERROR_H_
