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

// The result's solution partitions T_N per the independent checker, and the
// reported count agrees with it.
void expect_sound(const ConstructionResult& r) {
  ASSERT_TRUE(r.applicable) << r.name << ": " << r.note;
  auto adm = support::oracle_adm(r.solution);
  ASSERT_TRUE(adm.has_value()) << r.name << " N=" << r.solution.instance.n();
  EXPECT_EQ(*adm, r.achieved_adm) << r.name;
  EXPECT_EQ(r.achieved_adm, adm_count(r.solution));
}

}  // namespace

TEST(ConstructC1, ExamplesAndFormula) {
  EXPECT_EQ(construct_c1(5).achieved_adm, 10);
  EXPECT_EQ(construct_c1(4).achieved_adm, 8);
  EXPECT_EQ(construct_c1(7).achieved_adm, 21);
  for (int n = 2; n <= 120; ++n) {
    auto r = construct_c1(n);
    expect_sound(r);
    const long expected = n % 2 ? static_cast<long>(n) * (n - 1) / 2 : static_cast<long>(n) * n / 2;
    EXPECT_EQ(r.achieved_adm, expected) << n;
    EXPECT_EQ(r.certificate, Certificate::kOptimal) << n;
  }
  EXPECT_THROW(construct_c1(1), std::invalid_argument);
}

TEST(ConstructC2, RecursiveExamples) {
  EXPECT_EQ(construct_c2_recursive(5).achieved_adm, 8);
  EXPECT_EQ(construct_c2_recursive(8).achieved_adm, 24);
  EXPECT_EQ(construct_c2_recursive(4).achieved_adm, 6);
  EXPECT_EQ(construct_c2_recursive(2).achieved_adm, 2);
}

TEST(ConstructC2, RecursiveMatchesClosedForms) {
  for (int n = 2; n <= 60; ++n) {
    auto r = construct_c2_recursive(n);
    expect_sound(r);
    const long q = n / 4;
    const long expected[4] = {6 * q * q, 6 * q * q + 2 * q, 6 * q * q + 6 * q + 2, 6 * q * q + 8 * q + 3};
    EXPECT_EQ(r.achieved_adm, expected[n % 4]) << n;
    EXPECT_GE(r.achieved_adm, r.lower_bound.ceiling) << n;
  }
}

TEST(ConstructC2, TripartiteExamples) {
  for (int p : {3, 7, 9}) {
    for (int n : {4 * p, 4 * p + 1}) {
      auto r = construct_c2_tripartite(n);
      expect_sound(r);
      // 6 ADMs per K4 (8 per K5) on each class plus 34 per STS triple
      const long triples = static_cast<long>(p) * (p - 1) / 6;
      const long expected = (n % 4 == 0 ? 6L : 8L) * p + 34 * triples;
      EXPECT_EQ(r.achieved_adm, expected) << n;
      ASSERT_TRUE(r.predicted_adm.has_value());
      EXPECT_EQ(*r.predicted_adm, expected) << n;
    }
  }
  EXPECT_EQ(construct_c2_tripartite(12).achieved_adm, 52);
  EXPECT_EQ(construct_c2_tripartite(28).achieved_adm, 280);
  EXPECT_EQ(construct_c2_tripartite(13).achieved_adm, 58);
  EXPECT_FALSE(construct_c2_tripartite(8).applicable);
  EXPECT_FALSE(construct_c2_tripartite(14).applicable);
}

TEST(ConstructC2, TripartitePaddingStaysValid) {
  for (int n : {16, 17, 20, 21, 32, 33}) {
    auto r = construct_c2_tripartite(n);
    expect_sound(r);
    EXPECT_FALSE(r.predicted_adm.has_value()) << n;
    EXPECT_FALSE(r.note.empty());
  }
}

TEST(DoubleVertices, Examples) {
  BlockDesign tri{3, {{0}, {1}, {2}}, {{0, 1, 2}}, 3, "triangle"};
  auto [one, n1] = double_vertices(tri);
  EXPECT_EQ(n1, 6);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].adm(), 6u);

  auto g = gdd3(GroupType::parse("2^4"));
  auto [blocks, n] = double_vertices(g);
  EXPECT_EQ(n, 16);
  EXPECT_EQ(blocks.size(), 8u);
  long adm = 0;
  for (const auto& b : blocks) adm += static_cast<long>(b.adm());
  EXPECT_EQ(adm, 48);
  RingInstance inst(n, 3);
  for (const auto& b : blocks) EXPECT_TRUE(validate_block(b, inst).accepted());

  BlockDesign empty{1, {{0}}, {}, 3, "empty"};
  EXPECT_TRUE(double_vertices(empty).first.empty());
}

TEST(DoubleVertices, DistinguishedPointUsesFiveVertexBlocks) {
  auto sts = steiner_triple_system(7);
  auto [blocks, n] = double_vertices(sts, 0);
  EXPECT_EQ(n, 13);
  int fives = 0;
  for (const auto& b : blocks) fives += b.adm() == 5;
  EXPECT_EQ(fives, 3);
}

TEST(ConstructC3, Examples) {
  auto r13 = construct_c3(13);
  expect_sound(r13);
  EXPECT_EQ(r13.achieved_adm, 39);
  EXPECT_EQ(r13.certificate, Certificate::kOptimal);
  EXPECT_EQ(construct_c3(5).achieved_adm, 5);
  auto r7 = construct_c3(7);
  EXPECT_EQ(r7.achieved_adm, 12);
  EXPECT_EQ(r7.certificate, Certificate::kOptimal);
}

TEST(ConstructC3, SmallCasesMatchTheirStatedValues) {
  const std::map<int, long> stated{{5, 5}, {6, 10}, {7, 12}, {8, 18}, {9, 21}, {10, 28}, {11, 31}, {23, 132}};
  for (auto [n, v] : stated) {
    auto r = construct_c3(n);
    expect_sound(r);
    EXPECT_LE(r.achieved_adm, v) << n;
  }
}

TEST(ConstructC3, OptimalClassesHitTheBound) {
  for (int n = 12; n <= 64; ++n) {
    if (!c3::formula_is_optimal(n)) continue;
    auto r = construct_c3(n);
    expect_sound(r);
    EXPECT_EQ(r.achieved_adm, c3::formula(n)) << n;
    EXPECT_EQ(r.achieved_adm, lb_best(3, n).ceiling) << n;
    EXPECT_EQ(r.certificate, Certificate::kOptimal) << n;
  }
}

TEST(ConstructC3, OtherClassesStayWithinFormula) {
  for (int n = 16; n <= 50; ++n) {
    if (c3::formula_is_optimal(n)) continue;
    auto r = construct_c3(n);
    expect_sound(r);
    EXPECT_GE(r.achieved_adm, lb_best(3, n).ceiling) << n;
    if (n != 47) EXPECT_LE(r.achieved_adm, c3::formula(n)) << n;
  }
}

TEST(ConstructTriangular, Examples) {
  auto r25 = construct_triangular(6, 25);
  expect_sound(r25);
  EXPECT_EQ(r25.achieved_adm, 100);
  EXPECT_EQ(r25.certificate, Certificate::kOptimal);
  auto r31 = construct_triangular(6, 31);
  expect_sound(r31);
  EXPECT_EQ(r31.achieved_adm, 155);
  auto r13 = construct_triangular(3, 13);
  expect_sound(r13);
  EXPECT_EQ(r13.achieved_adm, construct_c3(13).achieved_adm);
  EXPECT_FALSE(construct_triangular(6, 26).applicable);
  EXPECT_FALSE(construct_triangular(2, 13, 2).applicable);
}

TEST(ConstructTriangular, MatchesItsCountWhenApplicable) {
  for (int c : {3, 6, 10}) {
    const int k = decompose(c).k;
    for (int n = 2 * k * 2; n <= 90; ++n) {
      auto r = construct_triangular(c, n, k);
      if (!r.applicable) continue;
      expect_sound(r);
      const long nn = n;
      EXPECT_EQ(r.achieved_adm, n % 2 ? nn * (nn - 1) / (2 * k) : nn * nn / (2 * k)) << c << "," << n;
    }
  }
}

TEST(ConstructBest, Examples) {
  auto a = construct_best(2, 5);
  expect_sound(a);
  EXPECT_EQ(a.achieved_adm, 8);
  EXPECT_EQ(a.certificate, Certificate::kOptimal);
  auto b = construct_best(1, 6);
  EXPECT_EQ(b.achieved_adm, 18);
  EXPECT_EQ(b.certificate, Certificate::kOptimal);
  auto c = construct_best(4, 5);
  expect_sound(c);
  EXPECT_LE(c.achieved_adm, 8);
  EXPECT_GE(c.achieved_adm, lb_best(4, 5).ceiling);
}

TEST(ConstructBest, NonincreasingInC) {
  for (int n = 3; n <= 26; ++n) {
    long prev = construct_best(1, n).achieved_adm;
    for (int c = 2; c <= 8; ++c) {
      auto r = construct_best(c, n);
      expect_sound(r);
      EXPECT_LE(r.achieved_adm, prev) << c << "," << n;
      EXPECT_GE(r.achieved_adm, r.lower_bound.ceiling) << c << "," << n;
      prev = r.achieved_adm;
    }
  }
}

TEST(ConstructBest, Deterministic) {
  auto a = construct_best(3, 29);
  auto b = construct_best(3, 29);
  EXPECT_EQ(a.name, b.name);
  ASSERT_EQ(a.solution.blocks.size(), b.solution.blocks.size());
  for (std::size_t i = 0; i < a.solution.blocks.size(); ++i)
    EXPECT_EQ(a.solution.blocks[i].arcs(), b.solution.blocks[i].arcs());
}

TEST(ConstructNamed, Dispatch) {
  EXPECT_EQ(construct_named("c1", 1, 7).achieved_adm, 21);
  EXPECT_EQ(construct_named("c3", 3, 13).achieved_adm, 39);
  EXPECT_THROW(construct_named("nope", 3, 13), std::invalid_argument);
}
