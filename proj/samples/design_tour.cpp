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

// Builds a few designs and the C = 3 ring solutions they induce.

#include <cstdio>

#include "grooming.hpp"

using namespace grooming;

int main() {
  for (const char* text : {"2^4", "2^6 4^1", "3^5", "1^1 3^4"}) {
    auto type = GroupType::parse(text);
    std::printf("%-8s %s\n", text, to_string(gdd3_exists(type)).c_str());
    BlockDesign d = gdd3(type);
    std::printf("         %zu triples on %d points via %s\n", d.blocks.size(), d.v, d.construction.c_str());
  }

  // Doubling 2^4 gives 8 six-vertex blocks on a 16-node ring.
  auto [blocks, n] = double_vertices(gdd3(GroupType::parse("2^4")));
  std::printf("doubled 2^4: %zu blocks on N=%d\n", blocks.size(), n);

  BlockDesign pg = projective_plane(3);
  BlockDesign g = gdd_from_bibd(pg, 0);
  std::printf("PG(2,3) minus a point: type %s, %zu blocks\n", g.type().to_string().c_str(), g.blocks.size());
}
