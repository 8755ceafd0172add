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

// Solves A(C,N) exactly for a small ring and prints the blocks.
//
//   small_solve C N

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "grooming.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: small_solve C N\n");
    return 1;
  }
  const int c = std::atoi(argv[1]);
  const int n = std::atoi(argv[2]);
  if (c < 1 || n < 2 || n > 10) {
    std::fprintf(stderr, "need C >= 1 and 2 <= N <= 10\n");
    return 1;
  }
  auto out = grooming::solve_exact(grooming::RingInstance(n, c));
  std::printf("A(%d,%d) = %lld [%s, %lld nodes, root bound %lld]\n", c, n,
              static_cast<long long>(out.best_adm), grooming::to_string(out.status).c_str(),
              static_cast<long long>(out.nodes_explored), static_cast<long long>(out.bound_used));
  for (const auto& b : out.solution.blocks) {
    std::printf("  load %d:", grooming::block_load(b, n).max());
    for (const auto& a : b.arcs()) std::printf(" %s", grooming::to_string(a).c_str());
    std::printf("\n");
  }
  std::cout << grooming::io::to_json(out.solution).dump() << "\n";
}
