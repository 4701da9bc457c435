// Copyright 2026 The swwer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWWER_ERROR_HPP_
#define SWWER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace swwer {

enum class ErrorKind {
  kEmptyReference,
  kEmptyScoreSet,
  kDegenerateColumn,
  kIo,
  kParse,
  kSchema,
  kDuplicateId,
  kMissingId,
  kEmptyCorpus,
  kUnknownDimension,
  kUnresolvedId,
  kDimensionality,
  kEmptyInput,
  kConfig,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace swwer

#endif  // SWWER_ERROR_HPP_
