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

TEST(Bounds, Decomposition) {
  for (int c = 1; c <= 2000; ++c) {
    auto d = decompose(c);
    EXPECT_GE(d.r, 0);
    EXPECT_LE(d.r, d.k);
    EXPECT_EQ(d.k * (d.k + 1) / 2 + d.r, c);
  }
  EXPECT_THROW(decompose(0), std::invalid_argument);
}

TEST(Bounds, GammaExamples) {
  EXPECT_EQ(gamma(2, 4), 5);
  EXPECT_EQ(gamma(3, 5), 10);
  EXPECT_EQ(gamma(7, 16), 52);
  EXPECT_THROW(gamma(3, 1), std::invalid_argument);
  EXPECT_THROW(gamma(0, 4), std::invalid_argument);
}

TEST(Bounds, GammaMatchesReferenceGrid) {
  const auto& t = oracle::reference_gamma();
  for (int c = 1; c <= 10; ++c)
    for (int p = 2; p <= 16; ++p) {
      EXPECT_EQ(gamma(c, p), t[c - 1][p - 2]) << "C=" << c << " p=" << p;
      // The reference grid leaves three cells on rho(C) unmarked.
      const bool unmarked = (c == 2 && p == 6) || (c == 8 && (p == 10 || p == 14));
      EXPECT_EQ(Rational(gamma(c, p), p) == rho(c), oracle::reference_gamma_marked(c, p) || unmarked)
          << "C=" << c << " p=" << p;
    }
}

TEST(Bounds, GammaMatchesExhaustiveSearch) {
  for (int c = 1; c <= 6; ++c)
    for (int p = 2; p <= 9; ++p) EXPECT_EQ(gamma(c, p), oracle::brute_gamma(c, p)) << "C=" << c << " p=" << p;
}

TEST(Bounds, RhoExamplesAndAlternateForm) {
  EXPECT_EQ(rho(4), Rational(7, 3));
  EXPECT_EQ(rho(1), Rational(1));
  EXPECT_EQ(rho(10), Rational(4));
  for (int c = 1; c <= 10; ++c) {
    auto [num, den] = oracle::reference_rho(c);
    EXPECT_EQ(rho(c), Rational(num, den));
  }
  for (int c = 1; c <= 1000; ++c) EXPECT_EQ(rho(c), rho_alternate(c)) << c;
}

// gamma(C,p)/p never exceeds rho(C) and reaches it infinitely often.
TEST(Bounds, RhoIsTheSupremum) {
  for (int c = 1; c <= 40; ++c) {
    bool hit = false;
    for (int p = 2; p <= 200; ++p) {
      EXPECT_LE(Rational(gamma(c, p), p), rho(c)) << "C=" << c << " p=" << p;
      hit = hit || Rational(gamma(c, p), p) == rho(c);
    }
    EXPECT_TRUE(hit) << c;
  }
}

TEST(Bounds, Wavelengths) {
  EXPECT_EQ(min_wavelengths(2, 5), 2);
  EXPECT_EQ(min_wavelengths(1, 4), 3);
  EXPECT_EQ(min_wavelengths(3, 3), 1);
  EXPECT_EQ(wavelength_report(1, 5).alpha, -1);
  EXPECT_EQ(wavelength_report(1, 6).alpha, 4);
  EXPECT_EQ(wavelength_report(1, 8).alpha, 8);
}

TEST(Bounds, GeneralExamples) {
  EXPECT_EQ(lb_general(2, 5).ceiling, 7);
  EXPECT_EQ(lb_general(3, 13).ceiling, 39);
  EXPECT_EQ(lb_general(1, 5).ceiling, 10);
  EXPECT_EQ(lb_general(2, 5).value, Rational(20, 3));
}

TEST(Bounds, BestExamples) {
  auto a = lb_best(2, 5);
  EXPECT_EQ(a.ceiling, 8);
  EXPECT_EQ(a.name, "tighter-c2");
  auto b = lb_best(3, 7);
  EXPECT_EQ(b.ceiling, 12);
  EXPECT_EQ(b.name, "c3-parity");
  auto c = lb_best(3, 12);
  EXPECT_EQ(c.ceiling, 36);
  EXPECT_EQ(c.name, "c3-parity");
  EXPECT_EQ(lb_best(1, 6).ceiling, 18);
  // tie keeps the general bound
  EXPECT_EQ(lb_best(3, 13).name, "general");
}

TEST(Bounds, BestDominatesEveryApplicableBound) {
  for (int c = 1; c <= 12; ++c)
    for (int n = 2; n <= 80; ++n) {
      auto best = lb_best(c, n);
      for (const auto& r : applicable_bounds(c, n)) {
        EXPECT_GE(best.ceiling, r.ceiling);
        EXPECT_GE(Rational(r.ceiling), r.value);
        EXPECT_LT(Rational(r.ceiling) - r.value, Rational(1));
      }
    }
}

// Every lower bound sits below the exact value on rings small enough for the
// oracle.
TEST(Bounds, BestIsBelowExactValue) {
  for (int c = 1; c <= 3; ++c)
    for (int n = 3; n <= 7; ++n) EXPECT_LE(lb_best(c, n).ceiling, oracle::exact_adm(n, c)) << c << "," << n;
}

TEST(Bounds, ChowLinIsComparisonOnly) {
  auto f = lb_chow_lin(3, 13);
  EXPECT_TRUE(f.comparison_only);
  for (int c = 1; c <= 50; ++c)
    for (int n = 3; n <= 200; n += 7) EXPECT_LT(lb_chow_lin(c, n).value, to_double(lb_general(c, n).value));
}

TEST(Bounds, RoutingComparison) {
  for (int c = 1; c <= 100; ++c) {
    auto r = compare_routings(c, 50);
    EXPECT_GE(r.ratio, Rational(1)) << c;
    EXPECT_LE(r.ratio, r.ratio_upper) << c;
    EXPECT_EQ(r.ratio, r.lb_unidirectional / r.lb_bidirectional);
  }
  EXPECT_EQ(eta(1), Rational(1, 2));
  EXPECT_EQ(compare_routings(1, 5).ratio, Rational(1));
}

TEST(Bounds, GammaTableFlags) {
  auto t = gamma_table({1, 2, 3}, {2, 3, 4, 8});
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_TRUE(t.rows[1][3].achieves_rho);   // C=2, p=8 -> 12
  EXPECT_FALSE(t.rows[1][2].achieves_rho);  // C=2, p=4 -> 5
  EXPECT_EQ(t.rhos[1], Rational(3, 2));
}
