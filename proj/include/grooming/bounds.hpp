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

// Closed-form quantities: gamma(C,p), rho(C), wavelength and ADM lower
// bounds, and the unidirectional/bidirectional comparison. Everything except
// the Chow-Lin figure is exact rational arithmetic.

#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grooming {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_of(const Rational& x) {
  return -floor_div(-x.numerator(), x.denominator());
}

inline std::int64_t floor_of(const Rational& x) { return floor_div(x.numerator(), x.denominator()); }

inline std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

inline double to_double(const Rational& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

// C = k(k+1)/2 + r with 0 <= r <= k.
struct GroomingDecomposition {
  int c = 0;
  int k = 0;
  int r = 0;
};

inline GroomingDecomposition decompose(int c) {
  if (c < 1) throw std::invalid_argument("grooming factor must be >= 1");
  int k = 0;
  while (static_cast<std::int64_t>(k + 1) * (k + 2) / 2 <= c) ++k;
  return {c, k, c - k * (k + 1) / 2};
}

inline std::int64_t gamma(int c, int p) {
  if (p < 2) throw std::invalid_argument("gamma needs p >= 2");
  const auto [cc, k, r] = decompose(c);
  const std::int64_t pp = p;
  if (p <= 2 * k + 1 || (p == 2 * k + 2 && 2 * r >= k + 2)) return pp * (pp - 1) / 2;
  if (p == 2 * k + 2 && r >= 1) return k * pp + 2 * r - 1;
  return k * pp + (r * pp) / (k + 1);
}

// k + r/(k+1).
inline Rational rho(int c) {
  const auto d = decompose(c);
  return Rational(d.k) + Rational(d.r, d.k + 1);
}

// C/(k+1) + k/2; agrees with rho().
inline Rational rho_alternate(int c) {
  const auto d = decompose(c);
  return Rational(c, d.k + 1) + Rational(d.k, 2);
}

inline int wavelength_alpha(int n) {
  if (n % 2 == 1) return -1;
  return n % 4 == 2 ? 4 : 8;
}

struct BoundReport {
  std::string name;
  Rational value{0};
  std::int64_t ceiling = 0;
  std::string formula;
  std::optional<int> k;
  std::optional<int> r;
  std::optional<int> alpha;
};

namespace detail {

inline BoundReport make_report(std::string name, Rational value, std::string formula, int c) {
  const auto d = decompose(c);
  BoundReport rep;
  rep.name = std::move(name);
  rep.value = value;
  rep.ceiling = ceil_of(value);
  rep.formula = std::move(formula);
  rep.k = d.k;
  rep.r = d.r;
  return rep;
}

inline void check_n(int n) {
  if (n < 2) throw std::invalid_argument("ring needs N >= 2 nodes");
}

}  // namespace detail

inline BoundReport wavelength_report(int c, int n) {
  detail::check_n(n);
  const std::int64_t nn = n;
  const int alpha = wavelength_alpha(n);
  auto rep = detail::make_report("wavelengths", Rational(nn * nn + alpha, 8LL * c),
                                 "(N^2+alpha)/(8C)", c);
  rep.alpha = alpha;
  return rep;
}

inline std::int64_t min_wavelengths(int c, int n) { return wavelength_report(c, n).ceiling; }

inline BoundReport lb_general(int c, int n) {
  detail::check_n(n);
  const auto d = decompose(c);
  const std::int64_t nn = n;
  Rational v = Rational(nn * (nn - 1), 2) * Rational(d.k + 1, d.k * (d.k + 1) + d.r);
  return detail::make_report("general", v, "N(N-1)/2 * (k+1)/(k(k+1)+r)", c);
}

// Every bound that applies to (C, N), general first.
inline std::vector<BoundReport> applicable_bounds(int c, int n) {
  detail::check_n(n);
  const std::int64_t nn = n;
  std::vector<BoundReport> out;
  out.push_back(lb_general(c, n));
  if (c == 1 && n % 2 == 0)
    out.push_back(detail::make_report("c1-parity", Rational(nn * nn, 2), "N^2/2", c));
  if (c == 2)
    out.push_back(detail::make_report("tighter-c2", Rational(11 * nn * nn - 8 * nn - 3, 32),
                                      "(11N^2-8N-3)/32", c));
  if (c == 3) {
    if (n % 4 == 3)
      out.push_back(
          detail::make_report("c3-parity", Rational(3 * nn * nn - nn, 12), "(3N^2-N)/12", c));
    else if (n % 2 == 0)
      out.push_back(detail::make_report("c3-parity", Rational(nn * nn, 4), "N^2/4", c));
  }
  if (c == 4)
    out.push_back(detail::make_report(
        "c4", Rational(7, 32) * Rational(nn * (nn - 1)) + Rational(3, 160) * Rational(nn - 1),
        "7/32 N(N-1) + 3/160 (N-1)", c));
  if (c == 5)
    out.push_back(detail::make_report(
        "c5", Rational(23, 120) * Rational(nn * (nn - 1)) + Rational(nn - 1, 40),
        "23/120 N(N-1) + (N-1)/40", c));
  return out;
}

// Largest integer ceiling among the applicable bounds; ties keep the earlier
// (general) report.
inline BoundReport lb_best(int c, int n) {
  auto all = applicable_bounds(c, n);
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i].ceiling > all[best].ceiling) best = i;
  return all[best];
}

struct ChowLinFigure {
  double value = 0.0;
  // Relative precision of the double evaluation.
  double precision = 1e-12;
  bool comparison_only = true;
};

// Valid for any routing; not comparable with lb_best as a certificate.
inline ChowLinFigure lb_chow_lin(int c, int n) {
  detail::check_n(n);
  if (c < 1) throw std::invalid_argument("grooming factor must be >= 1");
  const long double m = static_cast<long double>(n) * (n - 1);
  const long double inner = m * m / 2 - m;
  const long double v = std::sqrt(std::max<long double>(inner, 0)) / (2 * std::sqrt(static_cast<long double>(c)));
  return {static_cast<double>(v), 1e-12, true};
}

struct RoutingComparison {
  int c = 0;
  int n = 0;
  int k = 0;
  int r = 0;
  Rational rho{0};
  Rational eta{0};
  Rational lb_bidirectional{0};
  Rational lb_unidirectional{0};
  Rational ratio{0};  // lb_unidirectional / lb_bidirectional
  Rational ratio_upper{0};  // 1 + 1/(2(k+1))
};

inline Rational eta(int c) {
  const auto d = decompose(c);
  if (2 * d.r <= d.k) return Rational(d.k, 2);
  return Rational(c, d.k + 2);
}

inline RoutingComparison compare_routings(int c, int n) {
  detail::check_n(n);
  const auto d = decompose(c);
  RoutingComparison out;
  out.c = c;
  out.n = n;
  out.k = d.k;
  out.r = d.r;
  out.rho = rho(c);
  out.eta = eta(c);
  const Rational m(static_cast<std::int64_t>(n) * (n - 1));
  out.lb_bidirectional = m / out.rho;
  out.lb_unidirectional = m / (Rational(2) * out.eta);
  out.ratio = out.rho / (Rational(2) * out.eta);
  out.ratio_upper = Rational(1) + Rational(1, 2 * (d.k + 1));
  return out;
}

struct GammaCell {
  int c = 0;
  int p = 0;
  std::int64_t value = 0;
  bool achieves_rho = false;
};

struct GammaTable {
  std::vector<int> cs;
  std::vector<int> ps;
  std::vector<std::vector<GammaCell>> rows;  // rows[c index][p index]
  std::vector<Rational> rhos;
};

inline GammaTable gamma_table(const std::vector<int>& cs, const std::vector<int>& ps) {
  GammaTable t{cs, ps, {}, {}};
  for (int c : cs) {
    std::vector<GammaCell> row;
    const Rational rh = rho(c);
    for (int p : ps) {
      const std::int64_t g = gamma(c, p);
      row.push_back({c, p, g, Rational(g, p) == rh});
    }
    t.rows.push_back(std::move(row));
    t.rhos.push_back(rh);
  }
  return t;
}

}  // namespace grooming
