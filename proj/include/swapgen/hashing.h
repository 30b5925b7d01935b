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

#ifndef SWAPGEN_HASHING_H_
#define SWAPGEN_HASHING_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace swapgen {

// Lowercase hex SHA-256 of the UTF-8 bytes of `data`.
std::string Sha256Hex(std::string_view data);

// Per-item RNG seed derived from a run-wide seed and a stable key (the seed
// question id), so decisions for one question do not depend on which other
// questions are processed or in which order.
uint64_t DeriveSeed(uint64_t global_seed, std::string_view key);

// Small deterministic RNG wrapper. std::uniform_int_distribution is not
// specified bit-exactly across standard libraries, so bounded draws are done
// here by rejection sampling on the raw engine output.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound). bound must be positive.
  uint64_t Below(uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace swapgen

#endif  // SWAPGEN_HASHING_H_
