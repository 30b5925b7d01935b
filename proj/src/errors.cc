// Copyright 2026 The swapgen Authors.
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

#include "swapgen/errors.h"

namespace swapgen {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedFile:
      return "MalformedFile";
    case ErrorCode::kSchemaViolation:
      return "SchemaViolation";
    case ErrorCode::kIoFailure:
      return "IoFailure";
    case ErrorCode::kMissingFile:
      return "MissingFile";
    case ErrorCode::kUnsupportedLanguage:
      return "UnsupportedLanguage";
    case ErrorCode::kUnsupportedPos:
      return "UnsupportedPos";
    case ErrorCode::kUnknownContext:
      return "UnknownContext";
    case ErrorCode::kDuplicateId:
      return "DuplicateId";
    case ErrorCode::kDuplicateKey:
      return "DuplicateKey";
    case ErrorCode::kSampleTooLarge:
      return "SampleTooLarge";
    case ErrorCode::kEmptyCorpus:
      return "EmptyCorpus";
    case ErrorCode::kMissingScore:
      return "MissingScore";
    case ErrorCode::kScorerFailure:
      return "ScorerFailure";
    case ErrorCode::kConfigError:
      return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(message) {}

}  // namespace swapgen
