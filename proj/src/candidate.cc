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

#include "swapgen/candidate.h"

#include "swapgen/errors.h"
#include "swapgen/text.h"

namespace swapgen {

std::string_view StrategyName(Strategy s) {
  return s == Strategy::kAntonym ? "antonym" : "entity";
}

std::string ApplySwap(std::string_view question, CharSpan span,
                      std::string_view replacement) {
  const text::CodepointIndex index(question);
  if (span.start > span.end || span.end > index.size()) {
    throw Error(ErrorCode::kSchemaViolation, "replacement span out of range");
  }
  const std::size_t begin = index.ByteOffset(span.start);
  const std::size_t end = index.ByteOffset(span.end);
  std::string out;
  out.reserve(question.size() - (end - begin) + replacement.size());
  out.append(question.substr(0, begin));
  out.append(replacement);
  out.append(question.substr(end));
  return out;
}

}  // namespace swapgen
