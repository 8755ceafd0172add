// Copyright 2026 The Ring Grooming Authors
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

#pragma once

#include <optional>
#include <vector>

#include "grooming.hpp"
#include "oracles.hpp"

namespace support {

inline std::vector<std::vector<oracle::ArcPair>> blocks_of(const grooming::GroomingSolution& s) {
  std::vector<std::vector<oracle::ArcPair>> out;
  for (const auto& b : s.blocks) {
    out.emplace_back();
    for (const auto& a : b.arcs()) out.back().push_back({a.tail, a.head});
  }
  return out;
}

// ADM total as checked by the oracle, or nullopt when the oracle rejects.
inline std::optional<long> oracle_adm(const grooming::GroomingSolution& s) {
  std::vector<bool> fwd;
  if (s.instance.even()) fwd = s.instance.orientation();
  return oracle::check_partition(s.instance.n(), s.instance.c(), blocks_of(s), fwd);
}

}  // namespace support
