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

#include "swwer/error.hpp"

namespace swwer {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyReference: return "EmptyReference";
    case ErrorKind::kEmptyScoreSet: return "EmptyScoreSet";
    case ErrorKind::kDegenerateColumn: return "DegenerateColumn";
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kSchema: return "SchemaError";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kMissingId: return "MissingId";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kUnknownDimension: return "UnknownDimension";
    case ErrorKind::kUnresolvedId: return "UnresolvedId";
    case ErrorKind::kDimensionality: return "DimensionalityError";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kConfig: return "ConfigError";
  }
  return "Error";
}

}  // namespace swwer
