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

#include <gtest/gtest.h>

#include "support.hpp"

using namespace grooming;

namespace {

std::vector<oracle::ArcPair> pairs_of(const Block& b) {
  std::vector<oracle::ArcPair> out;
  for (const auto& a : b.arcs()) out.push_back({a.tail, a.head});
  return out;
}

int oracle_max_load(const Block& b, int n) {
  auto loads = oracle::ring_loads(pairs_of(b), n);
  return loads.empty() ? 0 : *std::max_element(loads.begin(), loads.end());
}

}  // namespace

TEST(Gadgets, K222OnTenNodes) {
  RingInstance inst(10, 3);
  Block b = instantiate_gadget("K222", {1, 2, 3, 6, 7, 8}, inst);
  EXPECT_EQ(b.arcs().size(), 12u);
  EXPECT_EQ(b.adm(), 6u);
  EXPECT_EQ(oracle_max_load(b, 10), 3);
  for (const auto& a : b.arcs()) EXPECT_NE((a.tail + 5) % 10, a.head) << to_string(a);
}

TEST(Gadgets, T5InftyIsTheWholeTournament) {
  RingInstance inst(5, 3);
  Block b = instantiate_gadget("T5-infty", {0, 1, 2, 3, 4}, inst);
  EXPECT_EQ(b.arcs().size(), 10u);
  auto t = oracle::tournament(5);
  auto got = pairs_of(b);
  std::sort(got.begin(), got.end());
  std::sort(t.begin(), t.end());
  EXPECT_EQ(got, t);
}

TEST(Gadgets, OrderingIsEnforced) {
  RingInstance inst(10, 3);
  EXPECT_THROW(instantiate_gadget("K222", {2, 1, 3, 6, 7, 8}, inst), GadgetError);
  EXPECT_THROW(instantiate_gadget("K222", {1, 1, 3, 6, 7, 8}, inst), GadgetError);
  EXPECT_THROW(instantiate_gadget("K222", {1, 2, 3}, inst), GadgetError);
  EXPECT_THROW(instantiate_gadget("K222", {1, 2, 3, 6, 7, 10}, inst), GadgetError);
  // a rotation of an increasing sequence is still cyclically increasing
  EXPECT_NO_THROW(instantiate_gadget("K222", {6, 7, 8, 1, 2, 3}, inst));
  EXPECT_THROW(find_gadget("no-such-gadget"), std::invalid_argument);
}

TEST(Gadgets, CyclicallyIncreasing) {
  EXPECT_TRUE(cyclically_increasing({0, 1, 2}));
  EXPECT_TRUE(cyclically_increasing({5, 7, 1, 3}));
  EXPECT_FALSE(cyclically_increasing({0, 2, 1}));
  EXPECT_FALSE(cyclically_increasing({3, 1, 2, 0}));
}

TEST(Gadgets, OverloadedPlacementIsRejected) {
  // T4 on four consecutive nodes; the oracle decides which placements fit.
  for (int n = 4; n <= 12; ++n) {
    RingInstance inst(n, 3);
    for (int a = 0; a < n; ++a) {
      std::vector<Node> lab{a, (a + 1) % n, (a + 2) % n, (a + 3) % n};
      std::vector<oracle::ArcPair> arcs;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          Arc o = inst.oriented(lab[i], lab[j]);
          arcs.push_back({o.tail, o.head});
        }
      auto loads = oracle::ring_loads(arcs, n);
      bool fits = *std::max_element(loads.begin(), loads.end()) <= 3;
      if (fits)
        EXPECT_NO_THROW(instantiate_gadget("T4", lab, inst)) << n << " " << a;
      else
        EXPECT_THROW(instantiate_gadget("T4", lab, inst), GadgetError) << n << " " << a;
    }
  }
}

// Every table gadget has at least one valid placement at its declared C, and
// every valid placement respects the load bound per the oracle.
TEST(Gadgets, EveryGadgetHasAValidPlacement) {
  for (const auto& [name, g] : gadget_table()) {
    const int m = static_cast<int>(g.slots.size());
    const int c = std::max(1, g.grooming_factor);
    bool placed = false;
    for (int n = m; n <= 2 * m + 2 && !placed; ++n) {
      RingInstance inst(n, c);
      // increasing label sequences drawn from [0, n)
      std::vector<int> mask(n, 0);
      std::fill(mask.begin(), mask.begin() + m, 1);
      do {
        std::vector<Node> lab;
        for (int x = 0; x < n; ++x)
          if (mask[x]) lab.push_back(x);
        try {
          Block b = instantiate_gadget(g, lab, inst);
          EXPECT_LE(oracle_max_load(b, n), c) << name;
          EXPECT_EQ(b.arcs().size(), g.pairs.size() + g.arcs.size()) << name;
          placed = true;
        } catch (const GadgetError&) {
        }
      } while (!placed && std::prev_permutation(mask.begin(), mask.end()));
    }
    EXPECT_TRUE(placed) << name;
  }
}

TEST(Gadgets, SmallTriangleGadgetsCarryLoadTwo) {
  for (const char* name : {"G5", "G6"}) {
    const Gadget& g = find_gadget(name);
    EXPECT_EQ(g.grooming_factor, 2);
    EXPECT_FALSE(g.ordered);
  }
  RingInstance inst(6, 2);
  Block b = instantiate_gadget("G6", {0, 1, 2, 3, 4, 5}, inst);
  EXPECT_EQ(b.arcs().size(), 9u);
  EXPECT_LE(oracle_max_load(b, 6), 2);
}

TEST(Gadgets, DoubledCompleteMultipartite) {
  for (int m = 1; m <= 5; ++m) {
    Gadget g = t2x_gadget(m);
    EXPECT_EQ(static_cast<int>(g.slots.size()), 2 * m);
    EXPECT_EQ(static_cast<int>(g.pairs.size()), 2 * m * (m - 1));
  }
  EXPECT_EQ(find_gadget("T2x3").pairs.size(), find_gadget("K222").pairs.size());
  EXPECT_THROW(t2x_gadget(0), std::invalid_argument);
}
