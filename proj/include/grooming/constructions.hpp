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

// Upper-bound constructions. Each returns a validated solution together with
// the closed-form count it is expected to reach.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grooming/bounds.hpp"
#include "grooming/designs.hpp"
#include "grooming/gadgets.hpp"
#include "grooming/ring.hpp"

namespace grooming {

enum class Certificate { kOptimal, kGap, kNotApplicable };

inline std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::kOptimal: return "optimal";
    case Certificate::kGap: return "gap";
    case Certificate::kNotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

struct ConstructionResult {
  std::string name;
  bool applicable = false;
  std::string note;
  GroomingSolution solution{RingInstance(2, 1), {}, ""};
  std::optional<std::int64_t> predicted_adm;
  // The predicted count is only claimed as an upper bound on A(C,N).
  bool predicted_is_upper_bound = true;
  std::int64_t achieved_adm = 0;
  BoundReport lower_bound;
  std::int64_t gap = 0;   // achieved - lower bound
  Rational ratio{1};      // achieved / lower bound
  Certificate certificate = Certificate::kNotApplicable;
};

// Where constructions obtain designs; the CLI swaps in cached sources.
struct DesignSources {
  std::function<BlockDesign(const GroupType&)> gdd3 = [](const GroupType& t) { return grooming::gdd3(t); };
  std::function<BlockDesign(int, int)> bibd = [](int v, int k) { return grooming::bibd(v, k); };
};

namespace detail {

inline ConstructionResult not_applicable(std::string name, int c, int n, std::string why) {
  ConstructionResult r;
  r.name = std::move(name);
  r.applicable = false;
  r.note = std::move(why);
  r.solution = GroomingSolution{RingInstance(std::max(n, 2), std::max(c, 1)), {}, r.name};
  r.lower_bound = lb_best(std::max(c, 1), std::max(n, 2));
  return r;
}

inline void annotate(ConstructionResult& r, int c) {
  const int n = r.solution.instance.n();
  r.achieved_adm = adm_count(r.solution);
  r.lower_bound = lb_best(c, n);
  r.gap = r.achieved_adm - r.lower_bound.ceiling;
  r.ratio = Rational(r.achieved_adm, std::max<std::int64_t>(r.lower_bound.ceiling, 1));
  r.certificate = r.gap == 0 ? Certificate::kOptimal : Certificate::kGap;
}

// Builds, validates and annotates a construction output.
inline ConstructionResult finish(std::string name, int n, int c, std::vector<Block> blocks,
                                 std::optional<std::int64_t> predicted, bool force_explicit = false,
                                 std::string note = {}) {
  ConstructionResult r;
  r.name = name;
  r.applicable = true;
  r.note = std::move(note);
  r.predicted_adm = predicted;
  r.solution = GroomingSolution{instance_from_blocks(n, c, blocks, force_explicit), std::move(blocks), name};
  canonicalize(r.solution);
  Verdict v = validate_solution(r.solution);
  if (!v) throw std::logic_error(name + " produced an invalid solution for N=" + std::to_string(n) + ": " +
                                 v.summary());
  annotate(r, c);
  return r;
}

// Order-preserving relabeling from a size-n ring to one of size n + 2: new
// nodes 0 and p+1 (p = n/2) are inserted in front of the two halves.
inline std::vector<Node> grow_by_two_map(int n) {
  const int p = n / 2;
  std::vector<Node> map(n);
  for (Node v = 0; v < n; ++v) map[v] = v < p ? v + 1 : v + 2;
  return map;
}

inline std::vector<Block> whole_tournament_block(const RingInstance& inst) {
  Tournament t(inst);
  return {Block(t.arcs())};
}

}  // namespace detail

// C = 1: C4's (x_A, i_A, x_B, i_B) added two nodes at a time.
inline ConstructionResult construct_c1(int n) {
  if (n < 2) throw std::invalid_argument("construct_c1 needs N >= 2");
  const std::int64_t nn = n;
  const std::int64_t predicted = n % 2 ? nn * (nn - 1) / 2 : nn * nn / 2;
  std::vector<Block> blocks;
  int cur = n % 2 == 0 ? 2 : 3;
  if (cur == 2)
    blocks.push_back(Block({{0, 1}}));
  else
    blocks.push_back(Block({{0, 1}, {1, 2}, {2, 0}}));
  while (cur < n) {
    const int p = cur / 2;
    blocks = relabel(blocks, detail::grow_by_two_map(cur));
    const Node xa = 0;
    const Node xb = p + 1;
    for (int i = 0; i < p; ++i) {
      const Node ia = i + 1;
      const Node ib = p + 2 + i;
      blocks.push_back(Block({{xa, ia}, {ia, xb}, {xb, ib}, {ib, xa}}));
    }
    if (cur % 2 == 0) {
      blocks.push_back(Block({{xa, xb}}));
    } else {
      const Node inf = cur + 1;
      blocks.push_back(Block({{xa, xb}, {xb, inf}, {inf, xa}}));
    }
    cur += 2;
  }
  auto r = detail::finish("c1-cycles", n, 1, std::move(blocks), predicted);
  r.predicted_is_upper_bound = false;
  return r;
}

inline std::int64_t c2_recursive_formula(int n) {
  const std::int64_t q = n / 4;
  switch (n % 4) {
    case 0: return 6 * q * q;
    case 1: return 6 * q * q + 2 * q;
    case 2: return 6 * q * q + 6 * q + 2;
    default: return 6 * q * q + 8 * q + 3;
  }
}

// C = 2 recursion N -> N+2 with two C4's sharing x_A, x_B per block.
inline ConstructionResult construct_c2_recursive(int n) {
  if (n < 2) throw std::invalid_argument("construct_c2_recursive needs N >= 2");
  std::vector<Block> blocks;
  int cur = n % 2 == 0 ? 2 : 3;
  if (cur == 2)
    blocks.push_back(Block({{0, 1}}));
  else
    blocks.push_back(Block({{0, 1}, {1, 2}, {2, 0}}));
  while (cur < n) {
    const int p = cur / 2;
    const int h = p / 2;
    blocks = relabel(blocks, detail::grow_by_two_map(cur));
    const Node xa = 0;
    const Node xb = p + 1;
    auto a = [](int i) { return i + 1; };
    auto b = [p](int i) { return p + 2 + i; };
    for (int i = 0; i < h; ++i) {
      const int j = i + h;
      blocks.push_back(Block({{xa, a(i)},
                              {xa, a(j)},
                              {a(i), xb},
                              {a(j), xb},
                              {xb, b(i)},
                              {xb, b(j)},
                              {b(i), xa},
                              {b(j), xa}}));
    }
    const bool odd_ring = cur % 2 == 1;
    const Node inf = cur + 1;
    std::vector<Arc> rest{{xa, xb}};
    if (p % 2 == 1) {
      const int l = p - 1;
      rest.insert(rest.end(), {{xa, a(l)}, {a(l), xb}, {xb, b(l)}, {b(l), xa}});
    }
    if (odd_ring) rest.insert(rest.end(), {{xb, inf}, {inf, xa}});
    blocks.emplace_back(std::move(rest));
    cur += 2;
  }
  return detail::finish("c2-recursive", n, 2, std::move(blocks), c2_recursive_formula(n), true);
}

namespace detail {

// The K_{4,4,4} split into 4 G6 + 2 G5 (34 vertices). Each label is
// (point index 0..2, class 0..3).
struct TripartiteLabel {
  int point;
  int cls;
};

inline const std::vector<std::vector<TripartiteLabel>>& k444_g6() {
  static const std::vector<std::vector<TripartiteLabel>> v{
      {{0, 0}, {1, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 3}},
      {{0, 1}, {1, 1}, {2, 1}, {0, 3}, {1, 3}, {2, 3}},
      {{0, 1}, {1, 2}, {2, 2}, {0, 3}, {1, 0}, {2, 0}},
      {{0, 0}, {2, 0}, {1, 1}, {0, 2}, {2, 2}, {1, 3}},
  };
  return v;
}

inline const std::vector<std::vector<TripartiteLabel>>& k444_g5() {
  static const std::vector<std::vector<TripartiteLabel>> v{
      {{2, 0}, {0, 2}, {1, 2}, {0, 3}, {1, 3}},
      {{2, 3}, {1, 0}, {1, 1}, {0, 3}, {0, 2}},
  };
  return v;
}

}  // namespace detail

// C = 2 from an STS on the point set, with each point spread over four
// classes A < B < C < D around the ring. Handles N = 4p and 4p + 1.
inline ConstructionResult construct_c2_tripartite(int n, const DesignSources& sources = {}) {
  const std::string name = "c2-tripartite";
  if (n < 12) return detail::not_applicable(name, 2, n, "needs N >= 12");
  if (n % 4 != 0 && n % 4 != 1) return detail::not_applicable(name, 2, n, "needs N = 0 or 1 mod 4");
  const bool with_inf = n % 4 == 1;
  const int p = n / 4;
  int pp = p;
  while (pp % 6 != 1 && pp % 6 != 3) ++pp;
  const int big_n = 4 * pp + (with_inf ? 1 : 0);
  const RingInstance inst(big_n, 2);
  auto pos = [pp](int l, int cls) { return cls * pp + l; };
  const Node inf = 4 * pp;

  std::vector<Block> blocks;
  BlockDesign sts = sources.bibd(pp, 3);
  for (const auto& t : sts.blocks) {
    std::vector<int> tri = t;
    std::sort(tri.begin(), tri.end());
    auto place = [&](const std::vector<detail::TripartiteLabel>& set) {
      std::vector<Node> labels;
      for (auto [pt, cls] : set) labels.push_back(pos(tri[pt], cls));
      return labels;
    };
    for (const auto& s : detail::k444_g6()) blocks.push_back(instantiate_gadget("G6", place(s), inst));
    for (const auto& s : detail::k444_g5()) blocks.push_back(instantiate_gadget("G5", place(s), inst));
  }
  // Per-point T4 (C4 plus a diameter, then the other diameter) or T5.
  const std::vector<Block> t4{Block({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}), Block({{1, 3}})};
  const std::vector<Block> t5{Block({{1, 3}, {3, 4}, {4, 1}}),
                              Block({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {2, 4}, {3, 0}, {4, 0}})};
  for (int l = 0; l < pp; ++l) {
    std::vector<Node> labels{pos(l, 0), pos(l, 1), pos(l, 2), pos(l, 3)};
    if (with_inf) labels.push_back(inf);
    for (const Block& b : relabel(with_inf ? t5 : t4, labels)) blocks.push_back(b);
  }
  const std::int64_t nn = n;
  std::optional<std::int64_t> predicted;
  std::string note;
  if (pp == p)
    predicted = with_inf ? (34 * nn * nn - 12 * nn - 22) / 96 : (34 * nn * nn + 8 * nn) / 96;
  else
    note = "built at p=" + std::to_string(pp) + ", classes " + std::to_string(p) + ".." + std::to_string(pp - 1) +
           " deleted";
  if (pp == p) return detail::finish(name, n, 2, std::move(blocks), predicted, false, note);

  GroomingSolution padded{instance_from_blocks(big_n, 2, blocks), std::move(blocks), name};
  std::vector<Node> dummies;
  for (int l = p; l < pp; ++l)
    for (int cls = 0; cls < 4; ++cls) dummies.push_back(pos(l, cls));
  GroomingSolution cut = delete_vertices(padded, dummies, name);
  return detail::finish(name, n, 2, std::move(cut.blocks), predicted, false, note);
}

namespace detail {

// Layout used by the C = 3 and triangular constructions: design point x sits
// at xA and xB; odd rings put an extra node first.
struct DoubledLayout {
  int points = 0;
  bool inf = false;

  int n() const { return 2 * points + (inf ? 1 : 0); }
  Node a(int x) const { return (inf ? 1 : 0) + x; }
  Node b(int x) const { return (inf ? 1 : 0) + points + x; }
  Node infinity() const { return 0; }

  // [inf?] xA for x in pts, then xB.
  std::vector<Node> doubled(const std::vector<int>& pts, bool with_inf) const {
    std::vector<Node> out;
    if (with_inf) out.push_back(infinity());
    for (int x : pts) out.push_back(a(x));
    for (int x : pts) out.push_back(b(x));
    return out;
  }
};

}  // namespace detail

// Replaces each design point x by xA, xB. Triples become K222 blocks; with a
// distinguished point, triples through it become T5-infty blocks and that
// point sits at ring node 0. Returns the blocks and the ring size.
inline std::pair<std::vector<Block>, int> double_vertices(const BlockDesign& design,
                                                          std::optional<Point> infinity = std::nullopt) {
  if (design.block_size != 3 && !design.blocks.empty())
    throw std::invalid_argument("double_vertices needs triples");
  if (!validate_design(design)) throw std::invalid_argument("double_vertices: design is invalid");
  if (infinity && (*infinity < 0 || *infinity >= design.v))
    throw std::invalid_argument("double_vertices: distinguished point out of range");
  // Design points other than infinity, in label order.
  std::vector<int> index(design.v, -1);
  int points = 0;
  for (Point x = 0; x < design.v; ++x)
    if (!infinity || x != *infinity) index[x] = points++;
  detail::DoubledLayout lay{points, infinity.has_value()};
  const int n = std::max(lay.n(), 2);
  const RingInstance inst(n, 3);
  std::vector<Block> out;
  for (const auto& t : design.blocks) {
    std::vector<int> s;
    bool through = false;
    for (Point x : t) {
      if (infinity && x == *infinity)
        through = true;
      else
        s.push_back(index[x]);
    }
    std::sort(s.begin(), s.end());
    if (through)
      out.push_back(instantiate_gadget("T5-infty", lay.doubled(s, true), inst));
    else
      out.push_back(instantiate_gadget("K222", lay.doubled(s, false), inst));
  }
  return {std::move(out), n};
}

// C = 3 constructions on doubled designs.
namespace c3 {

// Local decompositions of T_n on the layout (inf, 0A.., 0B..) for odd n and
// the one-node deletion for even n.
inline std::vector<Block> small_case(int n);

namespace detail {

using grooming::detail::DoubledLayout;

struct Piece {
  enum Kind { kInfTriangle, kTriangle, kStarInf, kStar, kC4, kPath } kind;
  std::vector<int> pts;
};

inline std::vector<Block> instantiate(const DoubledLayout& lay, const std::vector<Piece>& pieces) {
  const RingInstance inst(lay.n(), 3);
  std::vector<Block> out;
  for (const Piece& pc : pieces) {
    std::vector<int> s = pc.pts;
    switch (pc.kind) {
      case Piece::kInfTriangle:
        std::sort(s.begin(), s.end());
        out.push_back(instantiate_gadget("T5-infty", lay.doubled(s, true), inst));
        break;
      case Piece::kTriangle:
        std::sort(s.begin(), s.end());
        out.push_back(instantiate_gadget("K222", lay.doubled(s, false), inst));
        break;
      case Piece::kStarInf:
        out.push_back(instantiate_gadget("star-b", lay.doubled(s, true), inst));
        break;
      case Piece::kStar:
        out.push_back(instantiate_gadget("star-c", lay.doubled(s, false), inst));
        break;
      case Piece::kC4: {
        out.push_back(instantiate_gadget("c4-gadget", lay.doubled(s, true), inst));
        out.push_back(instantiate_gadget("T3", {lay.a(s[1]), lay.a(s[2]), lay.b(s[2])}, inst));
        break;
      }
      case Piece::kPath:
        out.push_back(instantiate_gadget("path8", lay.doubled(s, false), inst));
        break;
    }
  }
  return out;
}

inline GroomingSolution as_solution(int n, std::vector<Block> blocks, const std::string& name) {
  GroomingSolution s{instance_from_blocks(n, 3, blocks), std::move(blocks), name};
  canonicalize(s);
  return s;
}

inline std::vector<Block> odd_small_case(int n) {
  using P = Piece;
  switch (n) {
    case 3: return {Block({{0, 1}, {1, 2}, {2, 0}})};
    case 5: return grooming::detail::whole_tournament_block(RingInstance(5, 3));
    case 7:
      return instantiate({3, true}, {{P::kInfTriangle, {1, 2}}, {P::kStarInf, {0, 1, 2}}});
    case 9:
      return instantiate({4, true},
                         {{P::kInfTriangle, {1, 3}}, {P::kTriangle, {0, 2, 3}}, {P::kC4, {0, 1, 2}}});
    case 11:
      return instantiate({5, true}, {{P::kInfTriangle, {1, 3}},
                                     {P::kInfTriangle, {2, 4}},
                                     {P::kTriangle, {0, 1, 4}},
                                     {P::kStarInf, {0, 2, 3}},
                                     {P::kPath, {1, 2, 3, 4}}});
    case 23: {
      std::vector<Piece> pieces{{P::kStarInf, {0, 1, 2}}, {P::kStar, {3, 6, 8, 10}}, {P::kStar, {4, 5, 7, 9}}};
      for (auto pr : std::vector<std::pair<int, int>>{{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}})
        pieces.push_back({P::kInfTriangle, {pr.first, pr.second}});
      for (auto t : std::vector<std::vector<int>>{{0, 3, 5}, {0, 4, 6}, {0, 7, 9}, {0, 8, 10}, {1, 3, 7},
                                                  {1, 4, 8}, {1, 5, 9}, {1, 6, 10}, {2, 3, 9}, {2, 4, 10},
                                                  {2, 5, 8}, {2, 6, 7}, {5, 7, 10}, {6, 8, 9}})
        pieces.push_back({P::kTriangle, t});
      return instantiate({11, true}, pieces);
    }
    default: break;
  }
  throw std::invalid_argument("no direct C=3 decomposition for N=" + std::to_string(n));
}

}  // namespace detail

inline bool has_small_case(int n) {
  return (n >= 2 && n <= 11) || n == 22 || n == 23;
}

inline std::vector<Block> small_case(int n) {
  switch (n) {
    case 2: return {Block({{0, 1}})};
    case 4: return grooming::detail::whole_tournament_block(RingInstance(4, 3));
    case 6:
    case 10:
    case 22: {
      auto s = detail::as_solution(n + 1, detail::odd_small_case(n + 1), "c3-small");
      return delete_vertices(s, {0}, "c3-small").blocks;
    }
    case 8: {
      // Node 1A (ring position 2) lies in three blocks.
      auto s = detail::as_solution(9, detail::odd_small_case(9), "c3-small");
      return delete_vertices(s, {2}, "c3-small").blocks;
    }
    default: return detail::odd_small_case(n);
  }
}

// Closed-form target for every residue class mod 12.
inline std::int64_t formula(int n) {
  const std::int64_t nn = n;
  switch (n % 12) {
    case 0:
    case 4: return nn * nn / 4;
    case 1:
    case 5: return nn * (nn - 1) / 4;
    case 8: return nn * nn / 4 + 2;
    case 9: return nn * (nn - 1) / 4 + 3;
    case 2: return nn * nn / 4 + (nn + 4) / 6;
    case 3: return (nn * nn + 3) / 4;
    case 6: return nn * nn / 4 + nn / 6;
    case 7: return (nn * nn - 1) / 4;
    case 10: return nn * nn / 4 + (nn + 8) / 6;
    default:  // 11
      return (nn * nn - 1) / 4 + ((n == 11 || n == 35 || n == 47) ? 1 : 0);
  }
}

inline bool formula_is_optimal(int n) {
  int r = n % 12;
  return r == 0 || r == 1 || r == 4 || r == 5;
}

}  // namespace c3

namespace detail {

// Group sizes of the multipartite graph each residue class starts from, or
// empty when N is handled directly.
inline std::optional<GroupType> c3_group_type(int n) {
  const bool odd = n % 2 == 1;
  const int m = odd ? n - 1 : n;  // doubled points
  switch (n % 12) {
    case 0:
    case 1:
    case 4:
    case 5:
      if (m / 4 >= 3) return GroupType::uniform(2, m / 4);
      return std::nullopt;
    case 8:
    case 9: {
      const int q = (m - 4) / 4;
      if (q >= 4) return GroupType({{2, q - 1}, {4, 1}});
      return std::nullopt;
    }
    case 2:
    case 3: {
      const int q = (m + 4) / 6;
      if (q >= 5) return GroupType({{3, q - 1}, {1, 1}});
      return std::nullopt;
    }
    case 6:
    case 7: {
      const int q = m / 6;
      if (q >= 3) return GroupType::uniform(3, q);
      return std::nullopt;
    }
    default: {  // 10, 11
      const int q5 = (m - 4) / 6;
      const int q11 = (m - 16) / 6;
      if (q11 >= 7) return GroupType({{3, q11 - 1}, {11, 1}});
      if (q5 >= 5) return GroupType({{3, q5 - 1}, {5, 1}});
      return std::nullopt;
    }
  }
}

}  // namespace detail

// Doubling of a 3-GDD: triangles become K222's and each group g
// becomes a copy of the small case on 2|g| (+1) nodes.
inline ConstructionResult construct_c3_from_gdd(int n, const BlockDesign& gdd, const std::string& name) {
  const bool odd = n % 2 == 1;
  detail::DoubledLayout lay{gdd.v, odd};
  if (lay.n() != n) throw std::invalid_argument("design size does not match N");
  const RingInstance inst(odd ? n : n + 1, 3);
  // Even rings are built on the odd ring with a leading node, then that node
  // is removed, so the same layout covers both parities.
  detail::DoubledLayout host{gdd.v, true};
  std::vector<Block> blocks;
  for (const auto& t : gdd.blocks) {
    std::vector<int> s = t;
    std::sort(s.begin(), s.end());
    blocks.push_back(instantiate_gadget("K222", host.doubled(s, false), inst));
  }
  for (const auto& g : gdd.groups) {
    std::vector<int> s = g;
    std::sort(s.begin(), s.end());
    const int local_n = 2 * static_cast<int>(s.size()) + (odd ? 1 : 0);
    std::vector<Node> labels = host.doubled(s, odd);
    for (const Block& b : relabel(c3::small_case(local_n), labels)) blocks.push_back(b);
  }
  if (odd) return grooming::detail::finish(name, n, 3, std::move(blocks), c3::formula(n));
  GroomingSolution host_solution{inst, std::move(blocks), name};
  GroomingSolution cut = delete_vertices(host_solution, {0}, name);
  return grooming::detail::finish(name, n, 3, std::move(cut.blocks), c3::formula(n));
}

inline ConstructionResult construct_c3(int n, const DesignSources& sources = {}) {
  if (n < 2) throw std::invalid_argument("construct_c3 needs N >= 2");
  ConstructionResult r;
  if (c3::has_small_case(n)) {
    r = grooming::detail::finish("c3-doubling", n, 3, c3::small_case(n), c3::formula(n));
  } else if (n == 14 || n == 15) {
    // 3^2 1^1 does not exist; use the Fano plane with one line as a group.
    BlockDesign gdd = gdd_from_bibd_block(steiner_triple_system(7), 0);
    r = construct_c3_from_gdd(n, gdd, "c3-doubling");
    r.note = "3-GDD of type " + gdd.type().to_string();
  } else if (auto type = detail::c3_group_type(n)) {
    r = construct_c3_from_gdd(n, sources.gdd3(*type), "c3-doubling");
    r.note = "3-GDD of type " + type->to_string();
  } else {
    r = construct_c1(n);
    r.name = "c3-doubling";
    r.solution.instance = r.solution.instance.with_grooming_factor(3);
    r.solution.provenance = r.name;
    r.predicted_adm = c3::formula(n);
    r.note = "no 3-GDD route for this N; cycle cover fallback";
    grooming::detail::annotate(r, 3);
  }
  r.predicted_is_upper_bound = !c3::formula_is_optimal(n);
  return r;
}

// C >= k(k+1)/2: a (k+1)-GDD of type k^q from a (kq+1, k+1, 1)-BIBD. Blocks
// become T2x(k+1) gadgets, groups become whole T_{2k+1} (or T_{2k}).
inline ConstructionResult construct_triangular(int c, int n, int k = 0, const DesignSources& sources = {}) {
  if (k == 0) k = decompose(c).k;
  const std::string name = "triangular-k" + std::to_string(k);
  if (k < 1 || k * (k + 1) / 2 > c) return detail::not_applicable(name, c, n, "needs k(k+1)/2 <= C");
  const bool odd = n % 2 == 1;
  const int m = odd ? n - 1 : n;
  if (m % (2 * k) != 0 || m == 0) return detail::not_applicable(name, c, n, "needs N = 2kq or 2kq+1");
  const int q = m / (2 * k);
  if (q < 2) return detail::not_applicable(name, c, n, "needs q >= 2");
  BlockDesign gdd;
  try {
    gdd = gdd_from_bibd(sources.bibd(k * q + 1, k + 1), 0);
  } catch (const DesignError& e) {
    return detail::not_applicable(name, c, n, e.what());
  }
  const int k_load = k * (k + 1) / 2;
  detail::DoubledLayout lay{gdd.v, odd};
  const RingInstance inst(n, k_load);
  std::vector<Block> blocks;
  const Gadget g = t2x_gadget(k + 1);
  for (const auto& b : gdd.blocks) {
    std::vector<int> s = b;
    std::sort(s.begin(), s.end());
    blocks.push_back(instantiate_gadget(g, lay.doubled(s, false), inst));
  }
  for (const auto& grp : gdd.groups) {
    std::vector<int> s = grp;
    std::sort(s.begin(), s.end());
    std::vector<Node> labels = lay.doubled(s, odd);
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j) arcs.push_back(inst.oriented(labels[i], labels[j]));
    blocks.emplace_back(std::move(arcs));
  }
  const std::int64_t nn = n;
  const std::int64_t predicted = odd ? nn * (nn - 1) / (2 * k) : nn * nn / (2 * k);
  auto r = detail::finish(name, n, c, std::move(blocks), predicted);
  r.note = "(" + std::to_string(k * q + 1) + "," + std::to_string(k + 1) + ",1)-BIBD via " + gdd.construction;
  r.predicted_is_upper_bound = !odd;
  return r;
}

inline std::int64_t tournament_max_load(const RingInstance& inst) {
  return block_load(Block(Tournament(inst).arcs()), inst.n()).max();
}

// Every applicable construction for (C, N), validated.
inline std::vector<ConstructionResult> all_constructions(int c, int n, const DesignSources& sources = {}) {
  if (c < 1 || n < 2) throw std::invalid_argument("construct needs C >= 1 and N >= 2");
  std::vector<ConstructionResult> out;
  auto lift = [c](ConstructionResult r) {
    if (r.applicable) {
      r.solution.instance = r.solution.instance.with_grooming_factor(c);
      detail::annotate(r, c);
    }
    return r;
  };
  {
    RingInstance inst(n, c);
    if (tournament_max_load(inst) <= c) {
      auto r = detail::finish("whole-tournament", n, c, detail::whole_tournament_block(inst), n);
      r.predicted_is_upper_bound = false;
      out.push_back(r);
    }
  }
  out.push_back(lift(construct_c1(n)));
  if (c >= 2) {
    out.push_back(lift(construct_c2_recursive(n)));
    out.push_back(lift(construct_c2_tripartite(n, sources)));
  }
  if (c >= 3) out.push_back(lift(construct_c3(n, sources)));
  for (int k = 2; k * (k + 1) / 2 <= c; ++k) out.push_back(lift(construct_triangular(c, n, k, sources)));
  return out;
}

inline ConstructionResult construct_best(int c, int n, const DesignSources& sources = {}) {
  auto all = all_constructions(c, n, sources);
  const ConstructionResult* best = nullptr;
  for (const auto& r : all) {
    if (!r.applicable) continue;
    if (!best) {
      best = &r;
      continue;
    }
    auto key = [](const ConstructionResult& x) {
      return std::make_tuple(x.achieved_adm, x.certificate == Certificate::kOptimal ? 0 : 1, x.name);
    };
    if (key(r) < key(*best)) best = &r;
  }
  return *best;
}

inline ConstructionResult construct_named(const std::string& name, int c, int n, const DesignSources& sources = {}) {
  if (name == "best") return construct_best(c, n, sources);
  if (name == "c1") return construct_c1(n);
  if (name == "c2-recursive") return construct_c2_recursive(n);
  if (name == "c2-tripartite") return construct_c2_tripartite(n, sources);
  if (name == "c3") return construct_c3(n, sources);
  if (name == "triangular") return construct_triangular(c, n, 0, sources);
  throw std::invalid_argument("unknown construction '" + name + "'");
}

}  // namespace grooming
