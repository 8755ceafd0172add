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

void expect_witness(const SolveOutcome& r) {
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(validate_solution(r.solution).accepted());
  auto adm = support::oracle_adm(r.solution);
  ASSERT_TRUE(adm.has_value());
  EXPECT_EQ(*adm, r.best_adm);
}

SolveOutcome solve(int c, int n) { return solve_exact(RingInstance(n, c)); }

}  // namespace

TEST(Solver, StatedSmallValues) {
  struct Case {
    int c, n;
    long value;
  };
  for (auto [c, n, v] : std::vector<Case>{{1, 3, 3}, {1, 4, 8}, {1, 5, 10}, {2, 4, 6}, {2, 5, 8}, {3, 4, 4}, {3, 5, 5}}) {
    auto r = solve(c, n);
    expect_witness(r);
    EXPECT_EQ(r.status, SolveStatus::kProvedOptimal) << c << "," << n;
    EXPECT_EQ(r.best_adm, v) << c << "," << n;
  }
}

// Independent set-cover enumeration over admissible arc sets.
TEST(Solver, AgreesWithExhaustiveOracle) {
  for (int c = 1; c <= 3; ++c)
    for (int n = 3; n <= 7; ++n) {
      if (c == 3 && n == 7) continue;  // covered by the slow test below
      auto r = solve(c, n);
      expect_witness(r);
      EXPECT_EQ(r.status, SolveStatus::kProvedOptimal);
      EXPECT_EQ(r.best_adm, oracle::exact_adm(n, c)) << c << "," << n;
    }
}

TEST(Solver, AgreesWithExhaustiveOracleC3N7) {
  auto r = solve(3, 7);
  expect_witness(r);
  EXPECT_EQ(r.best_adm, oracle::exact_adm(7, 3));
}

TEST(Solver, ExplicitOrientationAgreesWithOracle) {
  for (int c = 1; c <= 3; ++c) {
    std::vector<bool> fwd{true, false, true};
    auto r = solve_exact(RingInstance::explicit_orientation(6, c, fwd));
    expect_witness(r);
    EXPECT_EQ(r.best_adm, oracle::exact_adm(6, c, fwd)) << c;
  }
}

TEST(Solver, SandwichedByBoundAndConstruction) {
  for (int c = 1; c <= 5; ++c)
    for (int n = 3; n <= 7; ++n) {
      auto r = solve(c, n);
      ASSERT_EQ(r.status, SolveStatus::kProvedOptimal);
      EXPECT_GE(r.best_adm, lb_best(c, n).ceiling) << c << "," << n;
      EXPECT_LE(r.best_adm, construct_best(c, n).achieved_adm) << c << "," << n;
    }
}

TEST(Solver, OverOrientations) {
  SolverOptions opt;
  opt.optimize_orientation = true;
  struct Case {
    int c, n;
    long value;
  };
  for (auto [c, n, v] : std::vector<Case>{{2, 4, 6}, {1, 4, 8}, {3, 6, 10}}) {
    auto r = solve_exact(RingInstance(n, c), opt);
    expect_witness(r);
    EXPECT_EQ(r.status, SolveStatus::kProvedOptimal);
    EXPECT_EQ(r.best_adm, v) << c << "," << n;
  }
  // every orientation solved separately, minimum taken by brute force
  for (int c = 1; c <= 3; ++c) {
    long best = -1;
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<bool> fwd{!(mask & 1), !(mask & 2), !(mask & 4)};
      long v = oracle::exact_adm(6, c, fwd);
      if (best < 0 || v < best) best = v;
    }
    EXPECT_EQ(solve_exact(RingInstance(6, c), opt).best_adm, best) << c;
  }
  EXPECT_THROW(solve_exact(RingInstance(5, 2), opt), std::invalid_argument);
}

TEST(Solver, CanonicalOrientationPicksOnePerOrbit) {
  for (int n : {4, 6, 8, 10}) {
    const int h = n / 2;
    std::set<std::vector<bool>> reps;
    std::set<std::vector<bool>> covered;
    for (int mask = 0; mask < (1 << h); ++mask) {
      std::vector<bool> fwd(h);
      for (int i = 0; i < h; ++i) fwd[i] = (mask >> i) & 1;
      if (detail::canonical_orientation(fwd, n)) {
        reps.insert(fwd);
        for (int m = 0; m < 2; ++m)
          for (int s = 0; s < n; ++s) covered.insert(detail::map_orientation(fwd, n, m == 1, s));
      }
    }
    EXPECT_EQ(covered.size(), static_cast<std::size_t>(1 << h)) << n;
    EXPECT_TRUE(reps.count(std::vector<bool>(h, true))) << n;
  }
}

TEST(Solver, Deterministic) {
  auto a = solve(3, 6);
  auto b = solve(3, 6);
  EXPECT_EQ(a.best_adm, b.best_adm);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
  ASSERT_EQ(a.solution.blocks.size(), b.solution.blocks.size());
  for (std::size_t i = 0; i < a.solution.blocks.size(); ++i) EXPECT_EQ(a.solution.blocks[i], b.solution.blocks[i]);
}

TEST(Solver, BudgetStatuses) {
  SolverOptions tiny;
  tiny.node_budget = 5;
  auto r = solve_exact(RingInstance(9, 3), tiny);
  EXPECT_NE(r.status, SolveStatus::kProvedOptimal);
  expect_witness(r);
  EXPECT_LE(r.nodes_explored, 6);
  EXPECT_GE(r.best_adm, lb_best(3, 9).ceiling);

  SolverOptions bad;
  bad.node_budget = 0;
  EXPECT_THROW(solve_exact(RingInstance(5, 2), bad), std::invalid_argument);
}

TEST(Solver, WithoutSeedingStillOptimal) {
  SolverOptions plain;
  plain.symmetry_breaking = 1;
  for (int n = 3; n <= 6; ++n) {
    auto r = solve_exact(RingInstance(n, 2), plain);
    expect_witness(r);
    EXPECT_EQ(r.best_adm, oracle::exact_adm(n, 2)) << n;
  }
}

TEST(Solver, CutoffExcludesWorseSolutions) {
  SolverOptions opt;
  opt.cutoff = 8;  // A(2,5) = 8, so nothing strictly better exists
  auto r = solve_exact(RingInstance(5, 2), opt);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.status, SolveStatus::kProvedOptimal);
}
