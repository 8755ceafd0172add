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

// Prints the C = 3 constructions for a range of ring sizes next to the best
// lower bound.
//
//   c3_table [first] [last]

#include <cstdio>
#include <cstdlib>

#include "grooming.hpp"

int main(int argc, char** argv) {
  int first = argc > 1 ? std::atoi(argv[1]) : 3;
  int last = argc > 2 ? std::atoi(argv[2]) : 40;
  if (first < 2 || last < first) {
    std::fprintf(stderr, "usage: c3_table [first >= 2] [last >= first]\n");
    return 1;
  }
  std::printf("%4s %6s %6s %4s  %s\n", "N", "ADMs", "bound", "gap", "route");
  for (int n = first; n <= last; ++n) {
    auto r = grooming::construct_c3(n);
    std::printf("%4d %6lld %6lld %4lld  %s\n", n, static_cast<long long>(r.achieved_adm),
                static_cast<long long>(r.lower_bound.ceiling), static_cast<long long>(r.gap),
                r.note.empty() ? "small case" : r.note.c_str());
  }
}
