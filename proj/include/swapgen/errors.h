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

#ifndef SWAPGEN_ERRORS_H_
#define SWAPGEN_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace swapgen {

enum class ErrorCode {
  kMalformedFile,
  kSchemaViolation,
  kIoFailure,
  kMissingFile,
  kUnsupportedLanguage,
  kUnsupportedPos,
  kUnknownContext,
  kDuplicateId,
  kDuplicateKey,
  kSampleTooLarge,
  kEmptyCorpus,
  kMissingScore,
  kScorerFailure,
  kConfigError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure in the library is reported as an Error carrying one of the
// codes above; the message names the offending file, line, or id.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  // The message without the code name prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace swapgen

#endif  // SWAPGEN_ERRORS_H_
